"""Exhaustive collision search over binary words for the two matrix maps,
classification of colliding pairs against the identity families, and the
Christoffel injectivity experiment.

The enumeration packs each matrix entry into a single big integer (one limb
per coefficient).  Both letter maps produce entries with nonnegative
coefficients and no negative exponents, and the limb width is sized from an
entrywise upper bound on the final coefficients, so packing is injective and
matrix products become plain integer arithmetic.  Groups are keyed by the
packed upper-right entry and re-verified afterwards against independently
recomputed polynomials.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Optional

from .cyclotomic import eval_cyclotomic
from .identities import partner, phi, psi
from .laurent import LaurentPoly
from .qmatrix import M_q, MU_A, MU_B, L_Q, R_Q, mu_q
from .words import apply_morphism, bar, letter_counts, mirror, require_word, BINARY


class Classification(str, Enum):
    IDENTITY1 = "identity1"
    IDENTITY2 = "identity2"
    BOTH = "both"
    CHAIN = "chain"          # explained only by composing family identities
    UNEXPLAINED = "unexplained"


@dataclass(frozen=True)
class PairClassification:
    x: str
    y: str
    kind: Classification
    witness: Optional[dict] = None
    w_search_bound: int = 0

    def to_json_dict(self) -> dict:
        return {"x": self.x, "y": self.y, "kind": self.kind.value,
                "witness": self.witness, "w_search_bound": self.w_search_bound}


@dataclass(frozen=True)
class CollisionGroup:
    polynomial: LaurentPoly
    words: tuple[str, ...]

    def to_json_dict(self) -> dict:
        return {"polynomial": self.polynomial.to_json_dict(),
                "words": list(self.words)}


@dataclass
class CollisionReport:
    map_kind: str
    max_len: int
    groups: list[CollisionGroup]
    classifications: list[PairClassification]
    words_searched: int

    @property
    def has_unexplained(self) -> bool:
        return any(c.kind is Classification.UNEXPLAINED for c in self.classifications)

    def summary(self) -> dict:
        counts = {kind.value: 0 for kind in Classification}
        for c in self.classifications:
            counts[c.kind.value] += 1
        return {"groups": len(self.groups),
                "colliding_words": sum(len(g.words) for g in self.groups),
                "pairs": len(self.classifications),
                "words_searched": self.words_searched,
                **counts}

    def group_of(self, word: str) -> Optional[CollisionGroup]:
        for g in self.groups:
            if word in g.words:
                return g
        return None

    def to_json_dict(self) -> dict:
        return {"map": self.map_kind, "max_len": self.max_len,
                "summary": self.summary(),
                "groups": [g.to_json_dict() for g in self.groups],
                "classifications": [c.to_json_dict() for c in self.classifications],
                "unexplained_present": self.has_unexplained}


class SearchBoundError(RuntimeError):
    """Raised when a search would exceed the configured safety bound."""

    def __init__(self, max_len: int, bound: int) -> None:
        words = 2 ** (max_len + 1) - 1
        est_mb = words * 2500 // (1 << 20)  # packed matrix rows plus word strings
        super().__init__(
            f"max_len {max_len} exceeds the safety bound {bound}: "
            f"{words} words, roughly {est_mb} MiB; raise the bound explicitly to proceed")
        self.max_len = max_len
        self.bound = bound


_MAPS = {"M": (L_Q, R_Q), "mu": (MU_A, MU_B)}


def _coefficient_bound(map_kind: str, max_len: int) -> int:
    """Entrywise bound on product coefficients: the matching entry of the
    q=1 sum of the two letter matrices raised to max_len dominates every
    coefficient of every entry of every product of max_len letter matrices."""
    ga, gb = _MAPS[map_kind]
    (a11, a12), (a21, a22) = ga.at_one()
    (b11, b12), (b21, b22) = gb.at_one()
    s = (a11 + b11, a12 + b12, a21 + b21, a22 + b22)
    m = (1, 0, 0, 1)
    for _ in range(max_len):
        m = (m[0] * s[0] + m[1] * s[2], m[0] * s[1] + m[1] * s[3],
             m[2] * s[0] + m[3] * s[2], m[2] * s[1] + m[3] * s[3])
    return max(m)


def _pack_poly(p: LaurentPoly, shift: int) -> int:
    out = 0
    for e, c in p.terms():
        if e < 0 or c < 0:
            raise ValueError("packed search requires nonnegative exponents and coefficients")
        out |= c << (shift * e)
    return out


def _unpack_poly(packed: int, shift: int) -> LaurentPoly:
    mask = (1 << shift) - 1
    coeffs = []
    while packed:
        coeffs.append(packed & mask)
        packed >>= shift
    return LaurentPoly(0, coeffs)


def _packed_letters(map_kind: str, shift: int):
    ga, gb = _MAPS[map_kind]
    return (tuple(_pack_poly(p, shift) for p in ga.entries()),
            tuple(_pack_poly(p, shift) for p in gb.entries()))


def _scan_words(map_kind: str, max_len: int, shift: int,
                prefix: str = "", stop_len: Optional[int] = None) -> dict[int, list[str]]:
    """Packed 12-entry -> words, for all words extending ``prefix`` with
    length in [len(prefix), stop_len or max_len]."""
    ga, gb = _packed_letters(map_kind, shift)
    m = (1, 0, 0, 1)
    for ch in prefix:
        g = ga if ch == "a" else gb
        m = (m[0] * g[0] + m[1] * g[2], m[0] * g[1] + m[1] * g[3],
             m[2] * g[0] + m[3] * g[2], m[2] * g[1] + m[3] * g[3])
    limit = max_len if stop_len is None else stop_len
    buckets: dict[int, list[str]] = {}
    stack = [(prefix, m)]
    while stack:
        w, m = stack.pop()
        buckets.setdefault(m[1], []).append(w)
        if len(w) < limit:
            for ch, g in (("a", ga), ("b", gb)):
                stack.append((w + ch,
                              (m[0] * g[0] + m[1] * g[2], m[0] * g[1] + m[1] * g[3],
                               m[2] * g[0] + m[3] * g[2], m[2] * g[1] + m[3] * g[3])))
    return buckets


def _word_map(map_kind: str):
    return M_q if map_kind == "M" else mu_q


def classify_pair(x: str, y: str, map_kind: str = "mu",
                  require_collision: bool = True) -> PairClassification:
    """Direct classification of one colliding unordered pair.

    The pair must consist of two distinct words whose 12-entries agree
    (checked unless ``require_collision`` is disabled by a caller that has
    already confirmed it).  Chain explanations need group context and are
    assigned by :func:`collide`, not here.
    """
    require_word(x, BINARY)
    require_word(y, BINARY)
    if x == y:
        raise ValueError("pairs are unordered distinct words")
    if map_kind not in _MAPS:
        raise ValueError(f"map_kind must be 'M' or 'mu', got {map_kind!r}")
    if require_collision:
        fn = _word_map(map_kind)
        if fn(x).m12 != fn(y).m12:
            raise ValueError(f"{x!r} and {y!r} do not share their 12-entry under {map_kind}")
    w_bound = max(len(x), len(y)) // 2
    if map_kind == "mu":
        id1 = _mu_identity1_witness(x, y)
        id2 = _mu_identity2_witness(x, y, w_bound) or _mu_identity2_witness(y, x, w_bound)
    else:
        id1 = _M_identity1_witness(x, y)
        id2 = _M_identity2_witness(x, y, w_bound) or _M_identity2_witness(y, x, w_bound)
    if id1 and id2:
        kind = Classification.BOTH
    elif id1:
        kind = Classification.IDENTITY1
    elif id2:
        kind = Classification.IDENTITY2
    else:
        kind = Classification.UNEXPLAINED
    return PairClassification(x, y, kind, witness=id2 or id1, w_search_bound=w_bound)


def _mu_identity1_witness(x: str, y: str) -> Optional[dict]:
    if len(x) == len(y) >= 2 and x[0] == y[0] == "a" and x[-1] == y[-1] == "b":
        if y[1:-1] == mirror(x[1:-1]):
            return {"family": "identity1", "inner": x[1:-1]}
    return None


def _mu_identity2_witness(x: str, y: str, w_bound: int) -> Optional[dict]:
    """Decompose x as a . psi_w(v) . w . b and check y against partner(v)."""
    if len(x) != len(y) or len(x) < 6:
        return None
    if x[0] != "a" or x[-1] != "b" or y[0] != "a" or y[-1] != "b":
        return None
    n = len(x)
    for wlen in range(0, w_bound + 1):
        block = 2 * wlen + 4
        body_len = n - 2 - wlen
        if body_len < block or body_len % block:
            continue
        w = x[n - 1 - wlen:n - 1]
        if y[n - 1 - wlen:n - 1] != w:
            continue
        images = psi(w)
        v = _peel(x[1:n - 1 - wlen], images, block)
        if v is None:
            continue
        if "a" + apply_morphism(images, partner(v)) + w + "b" == y:
            return {"family": "identity2", "w": w, "v": v}
    return None


def _strip_a_runs(x: str) -> Optional[tuple[int, str]]:
    """Split a^k . b...b . a^m; return (k, core) with core bracketed by b."""
    k = len(x) - len(x.lstrip("a"))
    core = x[k:].rstrip("a")
    if len(core) >= 2 and core[0] == "b" and core[-1] == "b":
        return k, core
    return None


def _M_identity1_witness(x: str, y: str) -> Optional[dict]:
    px, py = _strip_a_runs(x), _strip_a_runs(y)
    if not px or not py or px[0] != py[0]:
        return None
    if py[1][1:-1] == bar(px[1][1:-1]):
        return {"family": "identity1", "inner": px[1][1:-1], "k": px[0]}
    return None


def _M_identity2_witness(x: str, y: str, w_bound: int) -> Optional[dict]:
    px, py = _strip_a_runs(x), _strip_a_runs(y)
    if not px or not py or px[0] != py[0]:
        return None
    bx, by = px[1][1:-1], py[1][1:-1]
    if len(bx) != len(by) or len(bx) < 8:
        return None
    n = len(bx)
    for wlen in range(0, w_bound + 1):
        block = 2 * wlen + 8
        body_len = n - wlen
        if body_len < block or body_len % block:
            continue
        w = bx[n - wlen:]
        if by[n - wlen:] != w:
            continue
        images = phi(w)
        v = _peel(bx[:n - wlen], images, block)
        if v is None:
            continue
        if apply_morphism(images, partner(v)) + w == by:
            return {"family": "identity2", "w": w, "v": v, "k": px[0]}
    return None


def _peel(body: str, images: dict[str, str], block: int) -> Optional[str]:
    inverse = {img: letter for letter, img in images.items()}
    letters = []
    for i in range(0, len(body), block):
        letter = inverse.get(body[i:i + block])
        if letter is None:
            return None
        letters.append(letter)
    return "".join(letters)


def _chain_upgrade(words: tuple[str, ...],
                   pairs: list[PairClassification]) -> list[PairClassification]:
    """Within one group, mark unexplained pairs whose endpoints are joined by
    a chain of directly-explained pairs."""
    parent = {w: w for w in words}

    def find(w: str) -> str:
        while parent[w] != w:
            parent[w] = parent[parent[w]]
            w = parent[w]
        return w

    for c in pairs:
        if c.kind is not Classification.UNEXPLAINED:
            parent[find(c.x)] = find(c.y)
    out = []
    for c in pairs:
        if c.kind is Classification.UNEXPLAINED and find(c.x) == find(c.y):
            out.append(PairClassification(c.x, c.y, Classification.CHAIN,
                                          witness=None, w_search_bound=c.w_search_bound))
        else:
            out.append(c)
    return out


def collide(map_kind: str, max_len: int, *, jobs: int = 1,
            safety_bound: int = 16, classify: bool = True) -> CollisionReport:
    """All maximal groups of words of length <= max_len sharing their 12-entry.

    Deterministic: group words are sorted by (length, lexicographic) and the
    groups by their first word, independent of the worker count.
    """
    if map_kind not in _MAPS:
        raise ValueError(f"map_kind must be 'M' or 'mu', got {map_kind!r}")
    if max_len < 0:
        raise ValueError("max_len must be >= 0")
    if max_len > safety_bound:
        raise SearchBoundError(max_len, safety_bound)
    shift = _coefficient_bound(map_kind, max_len).bit_length() + 1
    jobs = max(1, jobs)
    if jobs == 1 or max_len < 4:
        buckets = _scan_words(map_kind, max_len, shift)
    else:
        from concurrent.futures import ProcessPoolExecutor
        from itertools import product

        depth = min(max(1, (jobs - 1).bit_length()), max_len)
        prefixes = sorted("".join(p) for p in product(BINARY, repeat=depth))
        buckets = _scan_words(map_kind, max_len, shift, "", stop_len=depth - 1)
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_scan_words, [map_kind] * len(prefixes),
                                    [max_len] * len(prefixes),
                                    [shift] * len(prefixes), prefixes))
        for part in results:
            for key, ws in part.items():
                buckets.setdefault(key, []).extend(ws)
    words_searched = sum(len(ws) for ws in buckets.values())

    groups = []
    direct_fn = _word_map(map_kind)
    for key, ws in buckets.items():
        if len(ws) < 2:
            continue
        ws = sorted(ws, key=lambda w: (len(w), w))
        poly = _unpack_poly(key, shift)
        # bucket soundness: confirm with independently recomputed polynomials
        for w in ws:
            if direct_fn(w).m12 != poly:
                raise AssertionError(f"packed bucket mismatch for word {w!r}")
        if map_kind == "mu" and len({letter_counts(w) for w in ws}) != 1:
            # the zeta_6 image pins both letter counts, so this cannot happen
            raise AssertionError(f"mu collision group mixes letter counts: {ws}")
        groups.append(CollisionGroup(poly, tuple(ws)))
    groups.sort(key=lambda g: (len(g.words[0]), g.words[0]))

    classifications: list[PairClassification] = []
    if classify:
        from itertools import combinations

        for g in groups:
            pairs = [classify_pair(x, y, map_kind, require_collision=False)
                     for x, y in combinations(g.words, 2)]
            classifications.extend(_chain_upgrade(g.words, pairs))
    return CollisionReport(map_kind, max_len, groups, classifications, words_searched)


@dataclass
class InjectivityReport:
    """Distinctness checks over the Christoffel words up to a length bound."""

    max_len: int
    word_count: int
    polynomials_distinct: bool
    zeta6_values_distinct: bool
    letter_counts_distinct: bool
    m12_by_word: dict[str, LaurentPoly] = field(repr=False, default_factory=dict)

    @property
    def ok(self) -> bool:
        return (self.polynomials_distinct and self.zeta6_values_distinct
                and self.letter_counts_distinct)

    def to_json_dict(self) -> dict:
        return {"max_len": self.max_len, "word_count": self.word_count,
                "polynomials_distinct": self.polynomials_distinct,
                "zeta6_values_distinct": self.zeta6_values_distinct,
                "letter_counts_distinct": self.letter_counts_distinct,
                "injective": self.ok}


def christoffel_injectivity(max_len: int) -> InjectivityReport:
    """Compute the mu entry of every Christoffel word of length <= max_len and
    check that the polynomials, their zeta_6 images, and the letter-count
    pairs are pairwise distinct.

    Matrices are built along the Christoffel tree (one multiplication per
    node, reusing both factors), so the cost is linear in the word count.
    """
    if max_len < 1:
        raise ValueError("max_len must be >= 1")
    from collections import deque

    m12: dict[str, LaurentPoly] = {"a": MU_A.m12, "b": MU_B.m12}
    queue = deque([("a", "b", MU_A, MU_B)])
    while queue:
        u, v, mat_u, mat_v = queue.popleft()
        if len(u) + len(v) > max_len:
            continue
        mat_uv = mat_u * mat_v
        m12[u + v] = mat_uv.m12
        queue.append((u, u + v, mat_u, mat_uv))
        queue.append((u + v, v, mat_uv, mat_v))

    polys = list(m12.values())
    distinct_polys = len(set(polys)) == len(polys)
    zeta6 = {eval_cyclotomic(p, 6) for p in polys}
    counts = {letter_counts(w) for w in m12}
    return InjectivityReport(max_len, len(m12), distinct_polys,
                             len(zeta6) == len(polys), len(counts) == len(polys),
                             m12_by_word=m12)
