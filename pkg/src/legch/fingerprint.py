"""Isomorphism-invariant fingerprints and mirror comparison.

A fingerprint collects, per augmentation, data that any degree-preserving
isomorphism of linearized contact cohomology rings must preserve: graded
dimensions, the rank of the cup product in each bidegree, whether each
degree tuple carries a defined (and nonzero modulo indeterminacy) Massey
bracket, and order-n cohomology dimensions.  Ranks and booleans only —
never coordinates, so the data is independent of every basis choice.
A differing fingerprint certifies that no isomorphism exists; equal
fingerprints are inconclusive.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from . import InternalConsistencyError
from .ainfty import CohomologyRing, HClass, build_ring, cup_product, massey_higher, massey_triple
from .algebra import DGA, mirror_dga
from .augment import Augmentation, enumerate_augmentations
from .gf2 import rank
from .linear import HomologyData
from .tilde import order_n_cohomology

__all__ = [
    "AugmentationProfile",
    "Fingerprint",
    "MirrorReport",
    "fingerprint_dga",
    "compare_mirror",
    "audit_basis_independence",
    "random_graded_basis",
]

DEFAULT_MASSEY_ORDER = 3
DEFAULT_ORDER_CAP = 2
DEFAULT_MAX_SYSTEMS = 1 << 20
DEFAULT_MAX_TUPLES = 4096


@dataclass(frozen=True, order=True)
class AugmentationProfile:
    """Invariants of one augmentation, all basis-independent.

    ``dims``: sorted (degree, dimension) pairs with nonzero dimension.
    ``cup_ranks``: sorted ((r, s), rank) pairs with nonzero rank.
    ``massey``: sorted ((order, degree tuple), (defined, nonzero)) pairs.
    ``order_dims``: sorted ((n, degree), dimension) pairs, n up to the cap.
    """

    dims: Tuple[Tuple[int, int], ...]
    cup_ranks: Tuple[Tuple[Tuple[int, int], int], ...]
    massey: Tuple[Tuple[Tuple[int, Tuple[int, ...]], Tuple[bool, bool]], ...]
    order_dims: Tuple[Tuple[Tuple[int, int], int], ...]


@dataclass(frozen=True)
class Fingerprint:
    """Multiset of per-augmentation profiles, in canonical sorted order."""

    profiles: Tuple[AugmentationProfile, ...]


def _standard_bases(h: HomologyData) -> Dict[int, List[int]]:
    return {k: [1 << i for i in range(h.dim(k))] for k in h.degrees()}


def cup_rank_table(
    ring: CohomologyRing, bases: Optional[Dict[int, List[int]]] = None
) -> Dict[Tuple[int, int], int]:
    """Rank of the cup product per bidegree (nonzero entries only)."""
    h = ring.cochain
    if bases is None:
        bases = _standard_bases(h)
    degrees = sorted(bases)
    table: Dict[Tuple[int, int], int] = {}
    for r in degrees:
        for s in degrees:
            columns = [
                cup_product(h, ring.structure, HClass(r, xv), HClass(s, yv)).coords
                for xv in bases[r]
                for yv in bases[s]
            ]
            value = rank(columns)
            if value:
                table[(r, s)] = value
    return table


def _nonzero_vectors(dim: int) -> range:
    return range(1, 1 << dim)


def _tuple_space(dims: Sequence[int], limit: int) -> bool:
    total = 1
    for d in dims:
        total *= (1 << d) - 1
        if total > limit:
            return False
    return True


def massey_table(
    ring: CohomologyRing,
    massey_order: int = DEFAULT_MASSEY_ORDER,
    max_systems: int = DEFAULT_MAX_SYSTEMS,
    max_tuples: int = DEFAULT_MAX_TUPLES,
) -> Dict[Tuple[int, Tuple[int, ...]], Tuple[bool, bool]]:
    """Per degree tuple: does any Massey bracket exist, and any nonzero one?

    Both booleans quantify over all tuples of nonzero classes in the given
    degrees, so they do not depend on a basis choice.  "Nonzero" means the
    value coset omits zero; truncated defining-system enumerations are never
    counted as nonzero.  Degree tuples whose class count exceeds
    ``max_tuples`` are skipped (a function of the dimensions alone).
    """
    h = ring.cochain
    degrees = [k for k in sorted(h.dims()) if h.dim(k)]
    table: Dict[Tuple[int, Tuple[int, ...]], Tuple[bool, bool]] = {}
    for order in range(3, massey_order + 1):
        stack: List[Tuple[int, ...]] = [()]
        while stack:
            prefix = stack.pop()
            if len(prefix) < order:
                for k in reversed(degrees):
                    stack.append(prefix + (k,))
                continue
            dims = [h.dim(k) for k in prefix]
            if not _tuple_space(dims, max_tuples):
                continue
            defined = nonzero = False
            for combo in _vector_tuples(dims):
                classes = [HClass(k, v) for k, v in zip(prefix, combo)]
                if order == 3:
                    result = massey_triple(h, ring.structure, *classes)
                else:
                    result = massey_higher(h, ring.structure, classes, cap=max_systems)
                if result.defined:
                    defined = True
                    if not result.truncated and not result.is_trivial():
                        nonzero = True
                        break
            table[(order, prefix)] = (defined, nonzero)
    return table


def _vector_tuples(dims: Sequence[int]) -> Iterable[Tuple[int, ...]]:
    if not dims:
        yield ()
        return
    for head in _nonzero_vectors(dims[0]):
        for rest in _vector_tuples(dims[1:]):
            yield (head,) + rest


def order_dim_table(
    dga: DGA, aug: Augmentation, order_cap: int = DEFAULT_ORDER_CAP
) -> Dict[Tuple[int, int], int]:
    """Order-n cohomology dimensions for 1 <= n <= order_cap."""
    table: Dict[Tuple[int, int], int] = {}
    for n in range(1, order_cap + 1):
        result = order_n_cohomology(dga, aug, n)
        for degree, dim in sorted(result.dims.items()):
            if dim:
                table[(n, degree)] = dim
    return table


def profile_for(
    dga: DGA,
    aug: Augmentation,
    massey_order: int = DEFAULT_MASSEY_ORDER,
    order_cap: int = DEFAULT_ORDER_CAP,
    max_systems: int = DEFAULT_MAX_SYSTEMS,
    max_tuples: int = DEFAULT_MAX_TUPLES,
    bases: Optional[Dict[int, List[int]]] = None,
) -> AugmentationProfile:
    """All invariants of a single augmentation."""
    ring = build_ring(dga, aug)
    dims = tuple(sorted((k, d) for k, d in ring.cochain.dims().items() if d))
    cups = tuple(sorted(cup_rank_table(ring, bases).items()))
    massey = tuple(sorted(massey_table(ring, massey_order, max_systems, max_tuples).items()))
    orders = tuple(sorted(order_dim_table(dga, aug, order_cap).items()))
    return AugmentationProfile(dims, cups, massey, orders)


def fingerprint_dga(
    dga: DGA,
    massey_order: int = DEFAULT_MASSEY_ORDER,
    order_cap: int = DEFAULT_ORDER_CAP,
    max_systems: int = DEFAULT_MAX_SYSTEMS,
    max_tuples: int = DEFAULT_MAX_TUPLES,
) -> Fingerprint:
    """Fingerprints of every augmentation, as a canonically ordered multiset."""
    profiles = [
        profile_for(dga, aug, massey_order, order_cap, max_systems, max_tuples)
        for aug in enumerate_augmentations(dga)
    ]
    return Fingerprint(tuple(sorted(profiles)))


def random_graded_basis(h: HomologyData, rng) -> Dict[int, List[int]]:
    """A random degree-preserving change of homology basis (as coordinates)."""
    bases: Dict[int, List[int]] = {}
    for k in h.degrees():
        dim = h.dim(k)
        while True:
            vectors = [rng.randrange(1, 1 << dim) for _ in range(dim)]
            if rank(vectors) == dim:
                bases[k] = vectors
                break
    return bases


def audit_basis_independence(dga: DGA, aug: Augmentation, rng, **options) -> bool:
    """Recompute one profile in a random basis and insist nothing moved."""
    ring = build_ring(dga, aug)
    baseline = profile_for(dga, aug, **options)
    shuffled = profile_for(dga, aug, bases=random_graded_basis(ring.cochain, rng), **options)
    if baseline != shuffled:
        raise InternalConsistencyError(
            "fingerprint changed under a degree-preserving basis change"
        )
    return True


@dataclass(frozen=True)
class MirrorReport:
    """Verdict of the fingerprint comparison between a DGA and its mirror."""

    verdict: str  # "DISTINGUISHED" | "INDISTINGUISHABLE-BY-THESE-INVARIANTS"
    witness: Optional[str]
    note: str
    knot: Fingerprint
    mirror: Fingerprint

    @property
    def distinguished(self) -> bool:
        return self.verdict == "DISTINGUISHED"


def _field_multiset(fp: Fingerprint, field: str) -> Dict:
    tables = [dict(getattr(p, field)) for p in fp.profiles]
    keys = sorted({k for t in tables for k in t})
    return {k: sorted(t.get(k, _missing(field)) for t in tables) for k in keys}


def _missing(field: str):
    return (False, False) if field == "massey" else 0


def _first_difference(left: Fingerprint, right: Fingerprint) -> str:
    if len(left.profiles) != len(right.profiles):
        return "augmentation count %d vs %d" % (len(left.profiles), len(right.profiles))
    messages = {
        "dims": "dim of cohomology in degree %s across augmentations: %s vs %s",
        "cup_ranks": "rank of the cup product in bidegree %s across augmentations: %s vs %s",
        "massey": "Massey bracket summary (defined, nonzero) in degree tuple %s: %s vs %s",
        "order_dims": "order-n cohomology dim at (n, degree) %s: %s vs %s",
    }
    for field in ("dims", "cup_ranks", "massey", "order_dims"):
        lt, rt = _field_multiset(left, field), _field_multiset(right, field)
        for key in sorted(set(lt) | set(rt)):
            miss = [_missing(field)] * len(left.profiles)
            lv, rv = lt.get(key, miss), rt.get(key, miss)
            if lv != rv:
                return messages[field] % (key, lv, rv)
    return "profiles differ only under joint per-augmentation pairing"


def compare_mirror(
    dga: DGA,
    massey_order: int = DEFAULT_MASSEY_ORDER,
    order_cap: int = DEFAULT_ORDER_CAP,
    max_systems: int = DEFAULT_MAX_SYSTEMS,
    max_tuples: int = DEFAULT_MAX_TUPLES,
) -> MirrorReport:
    """Compare a DGA against its Legendrian mirror by fingerprint."""
    args = (massey_order, order_cap, max_systems, max_tuples)
    knot = fingerprint_dga(dga, *args)
    mirror = fingerprint_dga(mirror_dga(dga), *args)
    if Counter(knot.profiles) == Counter(mirror.profiles):
        return MirrorReport(
            "INDISTINGUISHABLE-BY-THESE-INVARIANTS",
            None,
            "equal fingerprints do not certify an isomorphism; the comparison is inconclusive",
            knot,
            mirror,
        )
    return MirrorReport(
        "DISTINGUISHED",
        _first_difference(knot, mirror),
        "the named invariant is preserved by every degree-preserving isomorphism",
        knot,
        mirror,
    )
