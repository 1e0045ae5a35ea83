"""A-infinity structures on linearized cochain complexes.

The word-length-k part of a twisted differential dualizes to an operation
m_k of degree +1; together these satisfy the A-infinity relations.  This
module stores such structures as sparse tables, checks the relations and
the morphism equation, computes cup and (higher) Massey products, and
transfers the structure to homology through a strong deformation retract
by summing over rooted planar trees.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product as iproduct
from typing import Dict, List, NamedTuple, Optional, Sequence, Tuple

from . import ContractError, InternalConsistencyError
from .algebra import DGA, canon_degree
from .augment import Augmentation, twist
from .gf2 import bits, in_span, span_basis
from .linear import HomologyData, homology, linearized_complexes

__all__ = [
    "HClass",
    "AInftyStructure",
    "AInftyMorphism",
    "PlanarTree",
    "MasseyResult",
    "CheckReport",
    "CohomologyRing",
    "adjoint_structure",
    "build_ring",
    "check_an_relations",
    "check_ainfty_morphism",
    "cup_product",
    "massey_triple",
    "massey_higher",
    "enumerate_trees",
    "transfer_minimal_model",
]


class HClass(NamedTuple):
    """A homology class: degree plus coordinates over the chosen representatives."""

    degree: int
    coords: int


@dataclass
class CheckReport:
    ok: bool
    detail: str
    arity: Optional[int] = None
    args: Optional[Tuple[str, ...]] = None


@dataclass
class AInftyStructure:
    """Sparse operations m_k on a graded space with named basis.

    ``tables[k]`` maps an ordered k-tuple of basis labels to the image
    vector, a bitmask over the basis in the output degree.  Every m_k has
    degree +1: the output of m_k(x_1..x_k) lives in degree sum|x_i| + 1,
    which is enforced representationally (vectors are read in that degree).
    """

    modulus: int
    basis: Dict[int, Tuple[str, ...]]
    arity: int
    tables: Dict[int, Dict[Tuple[str, ...], int]]

    def __post_init__(self):
        if self.arity < 1:
            raise ContractError("arity bound must be at least 1")
        self.degree_of: Dict[str, int] = {}
        for k, names in self.basis.items():
            if canon_degree(self.modulus, k) != k:
                raise ContractError("basis degree %d is not canonical" % k)
            for lbl in names:
                if lbl in self.degree_of:
                    raise ContractError("duplicate basis label %s" % lbl)
                self.degree_of[lbl] = k
        self.order: Dict[str, int] = {}
        for k in sorted(self.basis):
            for lbl in self.basis[k]:
                self.order[lbl] = len(self.order)
        cleaned: Dict[int, Dict[Tuple[str, ...], int]] = {}
        for k, table in self.tables.items():
            if k < 1 or k > self.arity:
                raise ContractError("table arity %d outside 1..%d" % (k, self.arity))
            kept = {}
            for args, vec in table.items():
                if len(args) != k:
                    raise ContractError("entry %r in arity-%d table" % (args, k))
                for lbl in args:
                    if lbl not in self.degree_of:
                        raise ContractError("unknown basis label %s" % lbl)
                if vec:
                    width = len(self.names(self.out_degree(args)))
                    if vec >> width:
                        raise ContractError(
                            "entry on (%s) has bits outside the degree-(sum+1) basis"
                            % ", ".join(args)
                        )
                    kept[args] = vec
            cleaned[k] = kept
        self.tables = cleaned
        self._hits: Dict[int, Dict[str, List[Tuple[str, ...]]]] = {}

    def names(self, k: int) -> Tuple[str, ...]:
        return self.basis.get(canon_degree(self.modulus, k), ())

    def out_degree(self, args: Sequence[str]) -> int:
        return canon_degree(self.modulus, sum(self.degree_of[x] for x in args) + 1)

    def entry(self, args: Sequence[str]) -> int:
        table = self.tables.get(len(args))
        return table.get(tuple(args), 0) if table else 0

    def apply(self, pairs: Sequence[Tuple[int, int]]) -> Tuple[int, int]:
        """m_k on a tuple of (degree, vector) arguments, by multilinearity.

        Returns (output degree, output vector); the degree is meaningful
        even when the vector is zero.
        """
        outdeg = canon_degree(self.modulus, sum(d for d, _ in pairs) + 1)
        table = self.tables.get(len(pairs))
        if not table:
            return outdeg, 0
        label_choices = []
        for d, vec in pairs:
            names = self.names(d)
            chosen = [names[i] for i in bits(vec)]
            if not chosen:
                return outdeg, 0
            label_choices.append(chosen)
        acc = 0
        for combo in iproduct(*label_choices):
            acc ^= table.get(combo, 0)
        return outdeg, acc

    def hits(self, j: int) -> Dict[str, List[Tuple[str, ...]]]:
        """For each basis label y, the arity-j argument tuples whose image contains y."""
        if j not in self._hits:
            index: Dict[str, List[Tuple[str, ...]]] = {}
            for args, vec in self.tables.get(j, {}).items():
                names = self.names(self.out_degree(args))
                for i in bits(vec):
                    index.setdefault(names[i], []).append(args)
            self._hits[j] = index
        return self._hits[j]


@dataclass
class AInftyMorphism:
    """Sparse degree-0 maps f_n from tensor powers of one structure to another."""

    arity: int
    tables: Dict[int, Dict[Tuple[str, ...], int]]
    src: Optional["AInftyStructure"] = None
    dst: Optional["AInftyStructure"] = None

    def __post_init__(self):
        self.tables = {
            n: {args: vec for args, vec in table.items() if vec}
            for n, table in self.tables.items()
        }
        for n, table in self.tables.items():
            if n < 1 or n > self.arity:
                raise ContractError("morphism table arity %d outside 1..%d" % (n, self.arity))
            for args in table:
                if len(args) != n:
                    raise ContractError("entry %r in arity-%d morphism table" % (args, n))


def _basis_by_degree(dga: DGA) -> Tuple[Dict[int, Tuple[str, ...]], Dict[str, int]]:
    basis: Dict[int, List[str]] = {}
    pos: Dict[str, int] = {}
    for g in dga.generators:
        k = dga.degree(g)
        basis.setdefault(k, [])
        pos[g] = len(basis[k])
        basis[k].append(g)
    return {k: tuple(v) for k, v in basis.items()}, pos


def adjoint_structure(dga: DGA, aug: Augmentation) -> AInftyStructure:
    """Dualize each word-length part of the twisted differential.

    m_k(x_1..x_k) is the sum of the generators whose twisted differential
    contains the word x_1..x_k.  The relations are verified up to the arity
    bound (the longest word occurring); failure is an internal error.
    """
    twisted = twist(dga, aug)
    basis, pos = _basis_by_degree(twisted)
    arity = 1
    tables: Dict[int, Dict[Tuple[str, ...], int]] = {}
    for g in twisted.generators:
        for w in twisted.d(g):
            arity = max(arity, len(w))
            table = tables.setdefault(len(w), {})
            table[w] = table.get(w, 0) ^ (1 << pos[g])
    structure = AInftyStructure(twisted.modulus, basis, arity, tables)
    report = check_an_relations(structure, arity)
    if not report.ok:
        raise InternalConsistencyError(report.detail)
    return structure


def check_an_relations(s: AInftyStructure, up_to: int) -> CheckReport:
    """Verify sum over i+j+k=l of m_{i+1+k}(1 x m_j x 1) = 0 for l <= up_to."""
    for l in range(1, up_to + 1):
        total: Dict[Tuple[str, ...], int] = {}
        for j in range(1, min(s.arity, l) + 1):
            o = l + 1 - j
            if o < 1 or o > s.arity:
                continue
            outer = s.tables.get(o, {})
            inner_hits = s.hits(j)
            if not outer or not inner_hits:
                continue
            for i in range(o):
                for oargs, ovec in outer.items():
                    for iargs in inner_hits.get(oargs[i], ()):
                        full = oargs[:i] + iargs + oargs[i + 1 :]
                        cur = total.get(full, 0) ^ ovec
                        if cur:
                            total[full] = cur
                        else:
                            total.pop(full, None)
        if total:
            key = min(total, key=lambda a: tuple(s.order[x] for x in a))
            return CheckReport(
                False,
                "relation fails at arity %d on (%s)" % (l, ", ".join(key)),
                l,
                key,
            )
    return CheckReport(True, "relations hold up to arity %d" % up_to)


def _compositions(n: int, r: int) -> List[Tuple[int, ...]]:
    """All r-tuples of positive integers summing to n."""
    if r == 1:
        return [(n,)]
    out = []
    for first in range(1, n - r + 2):
        for rest in _compositions(n - first, r - 1):
            out.append((first,) + rest)
    return out


def check_ainfty_morphism(
    f: AInftyMorphism, src: AInftyStructure, dst: AInftyStructure, up_to: int
) -> CheckReport:
    """Verify the morphism equation up to the given arity.

    For every n <= up_to and every input tuple, the sum of
    f_{i+1+k}(1 x m_j x 1) must equal the sum over all splittings
    i_1+..+i_r = n of m_r(f_{i_1} x .. x f_{i_r}).
    """
    for n in range(1, up_to + 1):
        total: Dict[Tuple[str, ...], int] = {}

        def accumulate(args: Tuple[str, ...], vec: int) -> None:
            cur = total.get(args, 0) ^ vec
            if cur:
                total[args] = cur
            else:
                total.pop(args, None)

        for j in range(1, min(src.arity, n) + 1):
            o = n + 1 - j
            if o < 1 or o > f.arity:
                continue
            outer = f.tables.get(o, {})
            inner_hits = src.hits(j)
            if not outer or not inner_hits:
                continue
            for i in range(o):
                for oargs, ovec in outer.items():
                    for iargs in inner_hits.get(oargs[i], ()):
                        accumulate(oargs[:i] + iargs + oargs[i + 1 :], ovec)

        for r in range(1, min(dst.arity, n) + 1):
            for comp in _compositions(n, r):
                entry_lists = []
                ok = True
                for c in comp:
                    entries = list(f.tables.get(c, {}).items())
                    if not entries:
                        ok = False
                        break
                    entry_lists.append(entries)
                if not ok:
                    continue
                for chosen in iproduct(*entry_lists):
                    args = tuple(x for w, _ in chosen for x in w)
                    pairs = [
                        (
                            canon_degree(
                                src.modulus, sum(src.degree_of[x] for x in w)
                            ),
                            vec,
                        )
                        for w, vec in chosen
                    ]
                    _, val = dst.apply(pairs)
                    if val:
                        accumulate(args, val)

        if total:
            key = min(total, key=lambda a: tuple(src.order[x] for x in a))
            return CheckReport(
                False,
                "morphism equation fails at arity %d on (%s)" % (n, ", ".join(key)),
                n,
                key,
            )
    return CheckReport(True, "morphism equation holds up to arity %d" % up_to)


def cup_product(h: HomologyData, s: AInftyStructure, x: HClass, y: HClass) -> HClass:
    """The class of m_2 on chosen representatives; degree |x| + |y| + 1."""
    xv = h.include(x.degree, x.coords)
    yv = h.include(y.degree, y.coords)
    deg, vec = s.apply([(h.canon(x.degree), xv), (h.canon(y.degree), yv)])
    return HClass(deg, h.class_of(deg, vec))


@dataclass
class MasseyResult:
    """Outcome of a Massey product computation.

    When defined: a representative class (degree, value), the indeterminacy
    subspace basis, and for higher orders the full set of values over the
    enumerated defining systems.  When undefined: a witness description of
    the obstruction.
    """

    status: str  # "defined" | "undefined"
    degree: Optional[int] = None
    value: Optional[int] = None
    indeterminacy: List[int] = field(default_factory=list)
    value_set: Optional[List[int]] = None
    witness: Optional[str] = None
    truncated: bool = False
    systems: int = 0

    @property
    def defined(self) -> bool:
        return self.status == "defined"

    def contains(self, coords: int) -> bool:
        """Is the given class inside the value coset?"""
        if not self.defined:
            raise ContractError("undefined Massey product has no value coset")
        return in_span(self.indeterminacy, self.value ^ coords)

    def is_trivial(self) -> bool:
        return self.contains(0)


def _cup_image_basis(
    h: HomologyData, s: AInftyStructure, fixed: HClass, fixed_on_left: bool, other_degree: int
) -> List[int]:
    """Coordinates of cup products of a fixed class against a whole degree."""
    out = []
    other_degree = h.canon(other_degree)
    for i in range(h.dim(other_degree)):
        e = HClass(other_degree, 1 << i)
        pair = (fixed, e) if fixed_on_left else (e, fixed)
        coords = cup_product(h, s, *pair).coords
        if coords:
            out.append(coords)
    return out


def massey_triple(
    h: HomologyData, s: AInftyStructure, x: HClass, y: HClass, z: HClass
) -> MasseyResult:
    """Triple Massey product with explicit definedness check and indeterminacy."""
    ix = h.include(x.degree, x.coords)
    iy = h.include(y.degree, y.coords)
    iz = h.include(z.degree, z.coords)
    dxy, vxy = s.apply([(h.canon(x.degree), ix), (h.canon(y.degree), iy)])
    cxy = h.class_of(dxy, vxy)
    if cxy:
        return MasseyResult(
            "undefined", witness="first pair has nonzero product %s" % h.label(dxy, cxy)
        )
    dyz, vyz = s.apply([(h.canon(y.degree), iy), (h.canon(z.degree), iz)])
    cyz = h.class_of(dyz, vyz)
    if cyz:
        return MasseyResult(
            "undefined", witness="second pair has nonzero product %s" % h.label(dyz, cyz)
        )
    xt = h.homotopy(dxy, vxy)  # bounds m_2(x, y)
    yt = h.homotopy(dyz, vyz)  # bounds m_2(y, z)
    d3, v3 = s.apply(
        [(h.canon(x.degree), ix), (h.canon(y.degree), iy), (h.canon(z.degree), iz)]
    )
    _, va = s.apply([(h.canon(x.degree), ix), (h.canon(dyz - h.shift), yt)])
    _, vb = s.apply([(h.canon(dxy - h.shift), xt), (h.canon(z.degree), iz)])
    value = h.class_of(d3, v3 ^ va ^ vb)
    indet = _cup_image_basis(h, s, x, True, d3 - x.degree - 1) + _cup_image_basis(
        h, s, z, False, d3 - z.degree - 1
    )
    return MasseyResult(
        "defined", degree=d3, value=value, indeterminacy=span_basis(indet), systems=1
    )


def massey_higher(
    h: HomologyData,
    s: AInftyStructure,
    classes: Sequence[HClass],
    cap: int = 1 << 20,
) -> MasseyResult:
    """Order-n Massey product by exhaustive defining-system enumeration.

    Builds families b[l,m] with b[m,m] representing the m-th input class and
    d(b[l,m]) equal to the sum over proper consecutive partitions of [l,m]
    of m_k applied to the blocks.  The bracket value applies the same sum to
    [1,n].  All GF(2) choices (representative shifts by boundaries, solution
    shifts by cocycles) are enumerated, up to ``cap`` complete systems.
    """
    n = len(classes)
    if n < 3:
        raise ContractError("higher Massey products need at least 3 classes")
    if cap < 1:
        raise ContractError("system cap must be positive")

    deg: Dict[Tuple[int, int], int] = {}
    for l in range(1, n + 1):
        run = 0
        for m in range(l, n + 1):
            run += classes[m - 1].degree
            deg[(l, m)] = h.canon(run)

    variables: List[Tuple[int, int]] = []
    for width in range(n - 1):
        for l in range(1, n + 1 - width):
            m = l + width
            if (l, m) != (1, n):
                variables.append((l, m))

    def partitions(l: int, m: int):
        """Proper partitions of [l,m] into >= 2 consecutive blocks, as cut tuples."""
        inner = range(l, m)  # a cut after position i splits at i|i+1
        out = []
        for mask in range(1, 1 << len(inner)):
            cuts = [inner[i] for i in bits(mask)]
            blocks = []
            start = l
            for c in cuts:
                blocks.append((start, c))
                start = c + 1
            blocks.append((start, m))
            if len(blocks) <= s.arity:
                out.append(blocks)
        return out

    parts_cache = {(l, m): partitions(l, m) for (l, m) in variables + [(1, n)]}

    state: Dict[Tuple[int, int], int] = {}
    values: set = set()
    counters = {"systems": 0, "visited": 0}
    obstruction: List[str] = []
    value_degree = h.canon(sum(c.degree for c in classes) + 1)

    def block_sum(l: int, m: int) -> int:
        total = 0
        for blocks in parts_cache[(l, m)]:
            pairs = [(deg[b], state[b]) for b in blocks]
            if any(v == 0 for _, v in pairs):
                continue
            _, vec = s.apply(pairs)
            total ^= vec
        return total

    def freedom(l: int, m: int) -> Tuple[int, List[int]]:
        """Base point and shift basis for variable (l, m), or obstruction (None)."""
        k = deg[(l, m)]
        if l == m:
            base = h.include(k, classes[l - 1].coords)
            return base, list(h.boundaries.get(k, []))
        target = block_sum(l, m)  # lives in degree k + 1
        tdeg = h.canon(k + 1)
        if not h.is_cycle(tdeg, target):
            raise InternalConsistencyError(
                "defining-system constraint at (%d, %d) is not closed" % (l, m)
            )
        obs = h.project(tdeg, target)
        if obs:
            obstruction.append(
                "sub-bracket obstruction %s at (%d, %d)" % (h.label(tdeg, obs), l, m)
            )
            return -1, []
        return h.homotopy(tdeg, target), list(h.cycles.get(k, []))

    def walk(idx: int) -> bool:
        """DFS over variable choices; returns False to abort (cap exhausted)."""
        counters["visited"] += 1
        if counters["visited"] > 4 * cap:
            return False
        if idx == len(variables):
            value = block_sum(1, n)
            if not h.is_cycle(value_degree, value):
                raise InternalConsistencyError("Massey bracket value is not closed")
            values.add(h.project(value_degree, value))
            counters["systems"] += 1
            return counters["systems"] < cap
        l, m = variables[idx]
        base, shifts = freedom(l, m)
        if base == -1:
            return True  # dead branch, keep searching elsewhere
        for mask in range(1 << len(shifts)):
            vec = base
            for i in bits(mask):
                vec ^= shifts[i]
            state[(l, m)] = vec
            keep_going = walk(idx + 1)
            del state[(l, m)]
            if not keep_going:
                return False
        return True

    completed = walk(0)
    truncated = not completed

    if not values:
        witness = obstruction[-1] if obstruction else "no defining system found"
        return MasseyResult("undefined", witness=witness, truncated=truncated)
    ordered = sorted(values)
    rep = ordered[0]
    indet = span_basis([v ^ rep for v in ordered if v != rep])
    return MasseyResult(
        "defined",
        degree=value_degree,
        value=rep,
        indeterminacy=indet,
        value_set=ordered,
        truncated=truncated,
        systems=counters["systems"],
    )


@dataclass(frozen=True)
class PlanarTree:
    """Rooted planar tree; leaves are inputs, internal vertices are operations."""

    children: Tuple["PlanarTree", ...] = ()

    @property
    def is_leaf(self) -> bool:
        return not self.children

    def leaf_count(self) -> int:
        if self.is_leaf:
            return 1
        return sum(c.leaf_count() for c in self.children)

    def arity_sequence(self) -> Tuple[int, ...]:
        """Child counts in depth-first order (leaves contribute 0)."""
        out = [len(self.children)]
        for c in self.children:
            out.extend(c.arity_sequence())
        return tuple(out)


@lru_cache(maxsize=None)
def _trees(k: int) -> Tuple[PlanarTree, ...]:
    if k == 1:
        return (PlanarTree(),)
    out = []
    for r in range(2, k + 1):
        for comp in _compositions(k, r):
            for subtrees in iproduct(*(_trees(c) for c in comp)):
                out.append(PlanarTree(tuple(subtrees)))
    return tuple(out)


def enumerate_trees(k: int) -> List[PlanarTree]:
    """All rooted planar trees with k ordered leaves and no unary/nullary operations."""
    if k < 2:
        raise ContractError("trees need at least 2 leaves")
    return sorted(_trees(k), key=lambda t: t.arity_sequence())


def _verify_retract(h: HomologyData) -> None:
    d = h.differential
    for k in d.basis:
        dim = len(d.basis[k])
        nreps = len(h.reps.get(k, []))
        for i in range(nreps):
            e = 1 << i
            if h.project(k, h.include(k, e)) != e:
                raise ContractError("retract fails p(i(x)) = x in degree %d" % k)
            if h.homotopy(k, h.include(k, e)):
                raise ContractError("retract fails h(i(x)) = 0 in degree %d" % k)
        for i in range(dim):
            v = 1 << i
            hv = h.homotopy(k, v)
            back = h.canon(k - d.shift)
            lhs = d.apply(back, hv) ^ h.homotopy(h.canon(k + d.shift), d.apply(k, v))
            if lhs != v ^ h.include(k, h.project(k, v)):
                raise ContractError("retract fails the homotopy identity in degree %d" % k)
            if h.homotopy(back, hv):
                raise ContractError("retract fails h(h(x)) = 0 in degree %d" % k)
            if h.project(back, hv):
                raise ContractError("retract fails p(h(x)) = 0 in degree %d" % k)


def _tree_value(
    s: AInftyStructure, h: HomologyData, tree: PlanarTree, leaves
) -> Tuple[int, int]:
    if tree.is_leaf:
        return next(leaves)
    vals = []
    for child in tree.children:
        dv = _tree_value(s, h, child, leaves)
        if not child.is_leaf:
            dv = (h.canon(dv[0] - h.shift), h.homotopy(dv[0], dv[1]))
        vals.append(dv)
    return s.apply(vals)


def transfer_minimal_model(
    h: HomologyData, s: AInftyStructure, up_to: int
) -> Tuple[AInftyStructure, AInftyMorphism]:
    """Minimal A-infinity structure on homology, plus the inclusion morphism.

    mu_k projects the tree sum (operations at vertices, homotopies on
    internal edges, representatives at leaves); i_k applies the homotopy to
    the same sum, with i_1 the representative inclusion.  mu_1 = 0, and
    mu_2 is checked against the descended cup product.
    """
    if up_to < 2:
        raise ContractError("transfer needs arity at least 2")
    _verify_retract(h)

    hbasis: Dict[int, Tuple[str, ...]] = {}
    class_list: List[Tuple[int, int, str]] = []  # (degree, index, label)
    for k in h.degrees():
        names = tuple(h.label(k, 1 << i) for i in range(h.dim(k)))
        hbasis[k] = names
        for i, lbl in enumerate(names):
            class_list.append((k, i, lbl))

    mu_tables: Dict[int, Dict[Tuple[str, ...], int]] = {}
    i_tables: Dict[int, Dict[Tuple[str, ...], int]] = {
        1: {
            (lbl,): h.include(k, 1 << i)
            for k, i, lbl in class_list
            if h.include(k, 1 << i)
        }
    }
    for k in range(2, up_to + 1):
        trees = enumerate_trees(k)
        mu_k: Dict[Tuple[str, ...], int] = {}
        i_k: Dict[Tuple[str, ...], int] = {}
        for chosen in iproduct(class_list, repeat=k):
            inputs = [(d, h.include(d, 1 << i)) for d, i, _ in chosen]
            labels = tuple(lbl for _, _, lbl in chosen)
            outdeg = None
            total = 0
            for tree in trees:
                d_out, vec = _tree_value(s, h, tree, iter(inputs))
                if outdeg is None:
                    outdeg = d_out
                elif outdeg != d_out:
                    raise InternalConsistencyError("tree values in mixed degrees")
                total ^= vec
            coords = h.project(outdeg, total)
            if coords:
                mu_k[labels] = coords
            tail = h.homotopy(outdeg, total)
            if tail:
                i_k[labels] = tail
        mu_tables[k] = mu_k
        i_tables[k] = i_k

    mu = AInftyStructure(h.modulus, hbasis, up_to, mu_tables)

    for (dx, ix_, lx) in class_list:
        for (dy, iy_, ly) in class_list:
            got = mu.entry((lx, ly))
            want = cup_product(h, s, HClass(dx, 1 << ix_), HClass(dy, 1 << iy_)).coords
            if got != want:
                raise InternalConsistencyError(
                    "transferred mu_2 disagrees with the cup product on (%s, %s)"
                    % (lx, ly)
                )

    return mu, AInftyMorphism(up_to, i_tables, src=mu, dst=s)


@dataclass
class CohomologyRing:
    """Homological data bundle: both homologies and the cochain-level products."""

    chain: HomologyData
    cochain: HomologyData
    structure: AInftyStructure

    def cup_vec(self, k: int, xvec: int, l: int, yvec: int) -> int:
        """Cochain-level representative of the product of two cocycles."""
        _, vec = self.structure.apply(
            [(self.cochain.canon(k), xvec), (self.cochain.canon(l), yvec)]
        )
        return vec


def build_ring(dga: DGA, aug: Augmentation) -> CohomologyRing:
    """Linearize, take homology on both sides, and attach the operations."""
    chain_map, cochain_map = linearized_complexes(dga, aug)
    chain_h = homology(chain_map, "chain")
    cochain_h = homology(cochain_map, "cochain")
    return CohomologyRing(chain_h, cochain_h, adjoint_structure(dga, aug))
