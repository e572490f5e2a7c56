"""Constructive finitely generated abelian groups over Z.

Groups are held in invariant-factor normal form: generators are ordered
torsion-first (orders d_1 | d_2 | ... | d_k, each >= 2) followed by the free
generators.  Homomorphisms are integer matrices on generators, columns =
images.  Kernels, cokernels and arbitrary subquotients are computed exactly
through lattice arithmetic and re-expressed in normal form, so equality of
groups is equality of (rank, invariant factors).

The six-term kernel/cokernel sequence of a composable pair f, g

    0 -> Ker f -> Ker(gf) -> Ker g -> Coker f -> Coker(gf) -> Coker g -> 0

is constructed with explicit connecting maps (the middle map is
Ker g >-> B ->> Coker f) and its exactness is *checked*, never assumed:
at finite nodes by element enumeration, and always by exact lattice
bookkeeping (image lattice == kernel lattice at every node).
"""

import math
from dataclasses import dataclass, field
from itertools import product as _iproduct

import numpy as np

from . import intmat
from .errors import DomainError, ShapeError
from .intmat import Lattice, identity, intmat as _mat, mat_eq, smith, zeros

__all__ = [
    "FgAbelianGroup",
    "GroupHom",
    "Subquotient",
    "Subgroup",
    "Quotient",
    "SixTermSequence",
    "smith_normal_form",
    "subgroup",
    "quotient",
    "kernel",
    "cokernel",
    "image",
    "six_term",
    "n_torsion",
    "mod_n",
    "multiplication_hom",
    "identity_hom",
    "zero_hom",
    "group_order",
    "enumerate_elements",
    "is_exact_at",
    "finite_group_structure",
    "invariants_from_torsion_counts",
    "random_finite_group",
    "random_hom",
]

#: Orders up to which exactness checks additionally enumerate elements.
ENUMERATION_BOUND = 1 << 12


def smith_normal_form(m):
    """Smith normal form (U, D, V) of an integer matrix with D = U @ m @ V.

    D is diagonal with nonnegative entries d_1 | d_2 | ...; U and V are
    unimodular.  Accepts nested lists or an object-dtype array.
    """
    s = smith(_mat(m) if not isinstance(m, np.ndarray) else m.astype(object))
    return s.u, s.d, s.v


@dataclass(frozen=True)
class FgAbelianGroup:
    """Z^rank + Z/d_1 + ... + Z/d_k with d_1 | d_2 | ... | d_k, d_i >= 2.

    Generators are indexed torsion-first: generator i < k has order
    torsion[i], the remaining ``rank`` generators are free.
    """

    rank: int
    torsion: tuple = ()
    generator_labels: tuple = None

    def __post_init__(self):
        if self.rank < 0:
            raise DomainError("rank must be nonnegative")
        tors = tuple(int(d) for d in self.torsion)
        object.__setattr__(self, "torsion", tors)
        for d in tors:
            if d < 2:
                raise DomainError("invariant factors must be >= 2")
        for a, b in zip(tors, tors[1:]):
            if b % a != 0:
                raise DomainError(f"invariant factors must form a chain: {tors}")
        if self.generator_labels is not None:
            labels = tuple(self.generator_labels)
            if len(labels) != self.ngens:
                raise DomainError("one label per generator required")
            object.__setattr__(self, "generator_labels", labels)

    @property
    def ngens(self):
        return len(self.torsion) + self.rank

    @property
    def orders(self):
        """Order of each generator, 0 meaning infinite."""
        return self.torsion + (0,) * self.rank

    def order(self):
        """Group order, or None when infinite."""
        if self.rank > 0:
            return None
        return math.prod(self.torsion) if self.torsion else 1

    @property
    def is_trivial(self):
        return self.rank == 0 and not self.torsion

    def same_type(self, other):
        return self.rank == other.rank and self.torsion == other.torsion

    def relation_lattice(self):
        """The lattice d_i * e_i <= Z^ngens of generator relations."""
        cols = []
        for i, d in enumerate(self.orders):
            if d:
                v = zeros(self.ngens, 1)[:, 0]
                v[i] = d
                cols.append(v)
        return Lattice.from_columns(self.ngens, cols)

    def reduce(self, v):
        """Canonical coordinates of an element: torsion entries mod d_i."""
        v = np.asarray(v, dtype=object)
        if v.shape != (self.ngens,):
            raise ShapeError(f"element has {v.shape}, group has {self.ngens} generators")
        out = v.copy()
        for i, d in enumerate(self.orders):
            if d:
                out[i] = out[i] % d
        return out

    def zero(self):
        return zeros(self.ngens, 1)[:, 0]

    def __eq__(self, other):
        if not isinstance(other, FgAbelianGroup):
            return NotImplemented
        return self.same_type(other)

    def __hash__(self):
        return hash((self.rank, self.torsion))

    def __str__(self):
        parts = []
        if self.rank == 1:
            parts.append("Z")
        elif self.rank > 1:
            parts.append(f"Z^{self.rank}")
        parts.extend(f"Z/{d}" for d in self.torsion)
        return " x ".join(parts) if parts else "0"

    __repr__ = __str__


TRIVIAL_GROUP = FgAbelianGroup(0, ())


class GroupHom:
    """Homomorphism between FgAbelianGroups given by an integer matrix
    (columns = images of source generators, canonically reduced)."""

    def __init__(self, source, target, matrix):
        matrix = _mat(matrix) if not isinstance(matrix, np.ndarray) else matrix.astype(object)
        if matrix.shape != (target.ngens, source.ngens):
            raise ShapeError(
                f"hom matrix {matrix.shape} does not match "
                f"{target.ngens} x {source.ngens}"
            )
        self.source = source
        self.target = target
        m = matrix.copy()
        for j in range(source.ngens):
            m[:, j] = target.reduce(m[:, j])
        self.matrix = m
        self._validate()

    def _validate(self):
        # image of an order-d generator must be killed by d in the target
        t_orders = self.target.orders
        for j, d in enumerate(self.source.orders):
            if not d:
                continue
            for i, e in enumerate(t_orders):
                x = d * self.matrix[i, j]
                if (e and x % e != 0) or (not e and x != 0):
                    raise DomainError("matrix does not respect torsion")

    def __call__(self, v):
        v = np.asarray(v, dtype=object)
        return self.target.reduce(self.matrix @ v)

    def then(self, other):
        """Composite other . self (apply self first)."""
        if other.source.ngens != self.target.ngens or not other.source.same_type(self.target):
            raise ShapeError("homs not composable")
        return GroupHom(self.source, other.target, other.matrix @ self.matrix)

    def power(self, k):
        if self.source is not self.target and not self.source.same_type(self.target):
            raise ShapeError("power of a non-endomorphism")
        out = identity_hom(self.source)
        for _ in range(k):
            out = out.then(self)
        return out

    def is_zero(self):
        return all(x == 0 for x in self.matrix.flat)

    def __add__(self, other):
        if not (self.source.same_type(other.source) and self.target.same_type(other.target)):
            raise ShapeError("hom sum shape mismatch")
        return GroupHom(self.source, self.target, self.matrix + other.matrix)

    def __sub__(self, other):
        if not (self.source.same_type(other.source) and self.target.same_type(other.target)):
            raise ShapeError("hom difference shape mismatch")
        return GroupHom(self.source, self.target, self.matrix - other.matrix)

    def __eq__(self, other):
        return (
            isinstance(other, GroupHom)
            and self.source.same_type(other.source)
            and self.target.same_type(other.target)
            and mat_eq(self.matrix, other.matrix)
        )

    def __repr__(self):
        return f"GroupHom({self.source} -> {self.target})"


def identity_hom(g):
    return GroupHom(g, g, identity(g.ngens))


def zero_hom(source, target):
    return GroupHom(source, target, zeros(target.ngens, source.ngens))


def multiplication_hom(g, n):
    return GroupHom(g, g, n * identity(g.ngens))


class Subquotient:
    """Presentation of num/den for lattices den <= num <= Z^n containing the
    relation lattice of the ambient group.

    Carries the abstract group in normal form, an ambient representative for
    each abstract generator, and ``express`` mapping any ambient vector of
    the numerator to its abstract coordinates.
    """

    def __init__(self, ambient, num, den):
        self.ambient = ambient
        self.num = num
        self.den = den
        b = num.basis  # n x t, full column rank
        t = b.shape[1]
        coeffs = []
        for j in range(den.basis.shape[1]):
            c = num.solve(den.basis[:, j])
            if c is None:
                raise DomainError("denominator lattice not inside numerator")
            coeffs.append(c)
        cmat = (
            np.column_stack(coeffs).astype(object) if coeffs else zeros(t, 0)
        )
        s = smith(cmat)
        diag = s.diag + [0] * (t - len(s.diag))
        kept = [i for i in range(t) if diag[i] != 1]
        torsion = tuple(diag[i] for i in kept if diag[i] >= 2)
        rank = sum(1 for i in kept if diag[i] == 0)
        self.group = FgAbelianGroup(rank, torsion)
        self._kept = kept
        self._factors = [diag[i] for i in kept]
        self._u = s.u
        # ambient representatives of the abstract generators
        if kept:
            self.reps = b @ s.uinv[:, kept]
        else:
            self.reps = zeros(ambient_dim(ambient), 0)

    def express(self, v):
        """Abstract coordinates of an ambient vector lying in the numerator."""
        c = self.num.solve(np.asarray(v, dtype=object))
        if c is None:
            raise DomainError("vector outside the numerator lattice")
        y = self._u @ c
        out = zeros(len(self._kept), 1)[:, 0]
        for idx, i in enumerate(self._kept):
            d = self._factors[idx]
            out[idx] = y[i] % d if d else y[i]
        return out

    def rep(self, j):
        """Ambient representative of abstract generator j."""
        return self.reps[:, j]


def ambient_dim(g):
    return g.ngens if isinstance(g, FgAbelianGroup) else int(g)


@dataclass
class Subgroup:
    """A subgroup in normal form together with its inclusion hom."""

    group: FgAbelianGroup
    inclusion: GroupHom
    presentation: Subquotient

    def __iter__(self):
        return iter((self.group, self.inclusion))


@dataclass
class Quotient:
    """A quotient in normal form together with its projection hom."""

    group: FgAbelianGroup
    projection: GroupHom
    presentation: Subquotient

    def __iter__(self):
        return iter((self.group, self.projection))


def subgroup(g, gens):
    """Subgroup of g generated by the given coordinate vectors."""
    rel = g.relation_lattice()
    num = Lattice.from_columns(g.ngens, list(gens)).sum(rel)
    pres = Subquotient(g, num, rel)
    incl = GroupHom(pres.group, g, pres.reps)
    return Subgroup(pres.group, incl, pres)


def quotient(g, rel_gens):
    """Quotient of g by the subgroup generated by the given vectors."""
    rel = g.relation_lattice()
    den = Lattice.from_columns(g.ngens, list(rel_gens)).sum(rel)
    pres = Subquotient(g, Lattice.full(g.ngens), den)
    cols = [pres.express(col) for col in identity(g.ngens).T]
    mat = np.column_stack(cols).astype(object) if cols else zeros(pres.group.ngens, 0)
    proj = GroupHom(g, pres.group, mat)
    return Quotient(pres.group, proj, pres)


def kernel(h):
    """Kernel of a hom as a Subgroup of its source (maximal such)."""
    target_rel = h.target.relation_lattice()
    pre = target_rel.preimage(h.matrix)
    return subgroup(h.source, [pre.basis[:, j] for j in range(pre.basis.shape[1])])


def image(h):
    """Image of a hom as a Subgroup of its target."""
    return subgroup(h.target, [h.matrix[:, j] for j in range(h.matrix.shape[1])])


def cokernel(h):
    """Cokernel of a hom as a Quotient of its target."""
    return quotient(h.target, [h.matrix[:, j] for j in range(h.matrix.shape[1])])


def n_torsion(g, n):
    """The n-torsion subgroup G_n = Ker(n : G -> G) with its inclusion."""
    if n < 1:
        raise DomainError("n must be >= 1")
    gens = []
    for i, d in enumerate(g.orders):
        if d:
            q = math.gcd(d, n)
            if q >= 2:
                v = g.zero()
                v[i] = d // q
                gens.append(v)
    return subgroup(g, gens)


def mod_n(g, n):
    """The quotient G/n = Coker(n : G -> G) with its projection."""
    if n < 1:
        raise DomainError("n must be >= 1")
    return cokernel(multiplication_hom(g, n))


def group_order(g):
    return g.order()


def enumerate_elements(g, bound=None):
    """Iterate all elements (coordinate vectors) of a finite group."""
    n = g.order()
    if n is None:
        raise DomainError("cannot enumerate an infinite group")
    if bound is not None and n > bound:
        raise DomainError(f"group order {n} exceeds enumeration bound {bound}")
    ranges = [range(d) for d in g.torsion]
    for tup in _iproduct(*ranges):
        yield np.array(tup, dtype=object)


def _image_lattice(h):
    """Lattice of im(h) in the target coordinate space (with relations)."""
    cols = [h.matrix[:, j] for j in range(h.matrix.shape[1])]
    return Lattice.from_columns(h.target.ngens, cols).sum(h.target.relation_lattice())


def _kernel_lattice(h):
    """Lattice of ker(h) in the source coordinate space (with relations)."""
    return h.target.relation_lattice().preimage(h.matrix).sum(
        h.source.relation_lattice()
    )


def is_exact_at(incoming, outgoing, enum_bound=ENUMERATION_BOUND):
    """Check im(incoming) == ker(outgoing) at their common node.

    Verifies exact lattice equality always, and additionally enumerates
    elements when the groups involved are finite and small; the two verdicts
    must agree.  ``incoming=None`` means a zero arrow into the node
    (exactness = injectivity of outgoing); ``outgoing=None`` dually.
    """
    if incoming is None and outgoing is None:
        raise DomainError("need at least one map")
    node = outgoing.source if outgoing is not None else incoming.target
    rel = node.relation_lattice()
    # incoming None = arrow from 0 (image is trivial); outgoing None = arrow
    # to 0 (kernel is everything)
    im_lat = _image_lattice(incoming) if incoming is not None else rel
    ker_lat = _kernel_lattice(outgoing) if outgoing is not None else Lattice.full(node.ngens)
    verdict = im_lat == ker_lat

    n = node.order()
    if n is not None and n <= enum_bound:
        src_ok = incoming is None or (
            incoming.source.order() is not None
            and incoming.source.order() <= enum_bound
        )
        if src_ok:
            if incoming is None:
                im_set = {tuple(node.zero())}
            else:
                im_set = {
                    tuple(incoming(v)) for v in enumerate_elements(incoming.source)
                }
            if outgoing is None:
                ker_set = {tuple(v) for v in enumerate_elements(node)}
            else:
                ker_set = {
                    tuple(v)
                    for v in enumerate_elements(node)
                    if all(x == 0 for x in outgoing(v))
                }
            enum_verdict = im_set == ker_set
            if enum_verdict != verdict:
                raise AssertionError(
                    "lattice and enumeration exactness checks disagree "
                    f"(lattice={verdict}, enumeration={enum_verdict})"
                )
    return verdict


def check_exact_chain(maps, enum_bound=ENUMERATION_BOUND):
    """Exactness verdicts of 0 -> A_0 -> ... -> A_k -> 0 at every node."""
    verdicts = [is_exact_at(None, maps[0], enum_bound)]
    for i in range(1, len(maps)):
        verdicts.append(is_exact_at(maps[i - 1], maps[i], enum_bound))
    verdicts.append(is_exact_at(maps[-1], None, enum_bound))
    return verdicts


@dataclass
class SixTermSequence:
    """The six groups and five connecting maps of the kernel/cokernel
    sequence of a composable pair, with its checked exactness verdict."""

    groups: tuple
    maps: tuple
    exact: bool
    node_verdicts: tuple = ()

    @property
    def ker_f(self):
        return self.groups[0]

    @property
    def ker_gf(self):
        return self.groups[1]

    @property
    def ker_g(self):
        return self.groups[2]

    @property
    def coker_f(self):
        return self.groups[3]

    @property
    def coker_gf(self):
        return self.groups[4]

    @property
    def coker_g(self):
        return self.groups[5]


def six_term(f, g, enum_bound=ENUMERATION_BOUND):
    """Six-term exact sequence of kernels and cokernels of f and g.

    Requires f.target == g.source.  The middle map Ker g -> Coker f is the
    composite Ker g >-> B ->> Coker f; the remaining maps are the natural
    ones.  Exactness is verified at every node and reported, not assumed.
    """
    if not f.target.same_type(g.source) or f.target.ngens != g.source.ngens:
        raise ShapeError("f.target must equal g.source")
    gf = f.then(g)

    kf = kernel(f)
    kgf = kernel(gf)
    kg = kernel(g)
    cf = cokernel(f)
    cgf = cokernel(gf)
    cg = cokernel(g)

    def express_cols(pres, cols):
        out = [pres.express(c) for c in cols]
        return (
            np.column_stack(out).astype(object)
            if out
            else zeros(pres.group.ngens, 0)
        )

    # Ker f -> Ker gf : induced by the identity of A
    m1 = GroupHom(
        kf.group,
        kgf.group,
        express_cols(kgf.presentation, [kf.inclusion.matrix[:, j] for j in range(kf.group.ngens)]),
    )
    # Ker gf -> Ker g : induced by f
    m2 = GroupHom(
        kgf.group,
        kg.group,
        express_cols(
            kg.presentation,
            [f.matrix @ kgf.inclusion.matrix[:, j] for j in range(kgf.group.ngens)],
        ),
    )
    # Ker g -> Coker f : inclusion into B followed by the projection
    m3 = kg.inclusion.then(cf.projection)
    # Coker f -> Coker gf : induced by g on representatives
    m4 = GroupHom(
        cf.group,
        cgf.group,
        np.column_stack(
            [cgf.projection(g.matrix @ cf.presentation.rep(j)) for j in range(cf.group.ngens)]
        ).astype(object)
        if cf.group.ngens
        else zeros(cgf.group.ngens, 0),
    )
    # Coker gf -> Coker g : induced by the identity of C on representatives
    m5 = GroupHom(
        cgf.group,
        cg.group,
        np.column_stack(
            [cg.projection(cgf.presentation.rep(j)) for j in range(cgf.group.ngens)]
        ).astype(object)
        if cgf.group.ngens
        else zeros(cg.group.ngens, 0),
    )

    maps = (m1, m2, m3, m4, m5)
    verdicts = check_exact_chain(maps, enum_bound)
    return SixTermSequence(
        groups=(kf.group, kgf.group, kg.group, cf.group, cgf.group, cg.group),
        maps=maps,
        exact=all(verdicts),
        node_verdicts=tuple(verdicts),
    )


# ---------------------------------------------------------------------------
# Structure of a finite abelian group given by a black-box composition.


def finite_group_structure(elements, op, identity_elem):
    """Normal form, SNF generators and discrete logs of a finite abelian
    group given by composition on canonical (hashable, sortable) elements.

    Returns (group, gens, dlog) where gens[j] realizes abstract generator j
    and dlog maps an element to its coordinate vector over gens.  Generator
    choice is deterministic: the canonically smallest element of maximal
    order outside the subgroup generated so far.
    """
    elems = sorted(set(elements))
    n = len(elems)
    if identity_elem not in elems:
        raise DomainError("identity not among the elements")

    order_cache = {}

    def elt_order(x):
        if x not in order_cache:
            k, y = 1, x
            while y != identity_elem:
                y = op(y, x)
                k += 1
            order_cache[x] = k
        return order_cache[x]

    def pow_op(x, e):
        if e < 0:
            e %= elt_order(x)
        out, base = identity_elem, x
        while e:
            if e & 1:
                out = op(out, base)
            base = op(base, base)
            e >>= 1
        return out

    dlog0 = {identity_elem: ()}  # exponent vectors over raw_gens
    raw_gens = []
    rel_rows = []  # relation k_i * e_i - dlog(x_i^{k_i} over earlier gens)
    while len(dlog0) < n:
        remaining = [x for x in elems if x not in dlog0]
        mx = max(elt_order(e) for e in remaining)
        x = min(e for e in remaining if elt_order(e) == mx)
        g_idx = len(raw_gens)
        raw_gens.append(x)
        base = {e: v + (0,) * (g_idx - len(v)) for e, v in dlog0.items()}
        dlog0 = dict(base)
        power, k = x, 1
        while power not in base:
            for s, vec in base.items():
                dlog0[op(s, power)] = vec + (k,)
            power = op(power, x)
            k += 1
        rel = [-a for a in base[power]] + [k]
        rel_rows.append(rel)

    g = len(raw_gens)
    dlog0 = {e: tuple(v) + (0,) * (g - len(v)) for e, v in dlog0.items()}
    relmat = zeros(g, len(rel_rows))
    for j, rel in enumerate(rel_rows):
        for i, a in enumerate(rel):
            relmat[i, j] = a
    s = smith(relmat)
    diag = s.diag + [0] * (g - len(s.diag))
    kept = [i for i in range(g) if diag[i] != 1]
    if any(diag[i] == 0 for i in kept):
        raise AssertionError("relation lattice of a finite group must have full rank")
    torsion = tuple(diag[i] for i in kept)
    group = FgAbelianGroup(0, torsion)
    if group.order() != n:
        raise AssertionError(f"structure order {group.order()} != element count {n}")

    gens = []
    for j in kept:
        col = s.uinv[:, j]
        h = identity_elem
        for i in range(g):
            h = op(h, pow_op(raw_gens[i], int(col[i])))
        gens.append(h)

    u = s.u

    def dlog(x):
        vec = np.array(dlog0[x], dtype=object)
        y = u @ vec
        return group.reduce(np.array([y[i] for i in kept], dtype=object))

    return group, gens, dlog


def invariants_from_torsion_counts(elements, add, zero):
    """Isomorphism type of a finite abelian group from k-torsion counts.

    Independent of the presentation machinery: counts #{x : p^j x = 0}
    prime by prime and reconstructs the invariant factors from the count
    ratios.  Used as the brute-force oracle for cohomology computations.
    """
    n = len(elements)
    orders = {}
    for x in elements:
        k, y = 1, x
        while y != zero:
            y = add(y, x)
            k += 1
        orders[x] = k
    exponent = math.lcm(*orders.values()) if orders else 1
    per_prime = {}
    for p in _prime_factors(exponent):
        ms = []  # ms[j-1] = number of invariant factors with p-valuation >= j
        prev, j = 1, 1
        while True:
            nj = sum(1 for x in elements if p**j % orders[x] == 0)
            m = _exact_log(nj // prev, p)
            if m == 0:
                break
            ms.append(m)
            prev = nj
            j += 1
        exps = []
        for jj, m in enumerate(ms, start=1):
            nxt = ms[jj] if jj < len(ms) else 0
            exps.extend([jj] * (m - nxt))
        per_prime[p] = sorted(exps, reverse=True)
    width = max((len(v) for v in per_prime.values()), default=0)
    factors = []
    for pos in range(width):
        f = 1
        for p, exps in per_prime.items():
            if pos < len(exps):
                f *= p ** exps[pos]
        factors.append(f)
    factors = sorted(factors)
    if (math.prod(factors) if factors else 1) != n:
        raise AssertionError("torsion counts inconsistent with group order")
    return FgAbelianGroup(0, tuple(factors))


def _exact_log(q, p):
    m = 0
    while q % p == 0:
        q //= p
        m += 1
    if q != 1:
        raise AssertionError(f"torsion count ratio {q}*{p}^{m} is not a p-power")
    return m


def _prime_factors(n):
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


# ---------------------------------------------------------------------------
# Random generators for verification suites.


def random_finite_group(rng, max_order=ENUMERATION_BOUND, factor_pool=(2, 3, 4, 8, 9, 12)):
    """Random finite abelian group of order <= max_order, factors drawn from
    the pool and reassembled into a valid invariant-factor chain."""
    factors = []
    order = 1
    for _ in range(rng.randint(1, 4)):
        d = rng.choice(factor_pool)
        if order * d > max_order:
            break
        factors.append(d)
        order *= d
    if not factors:
        factors = [rng.choice((2, 3, 4))]
    # reassemble into a divisibility chain via prime decomposition
    per_prime = {}
    for f in factors:
        for p in _prime_factors(f):
            e = 0
            while f % p == 0:
                f //= p
                e += 1
            per_prime.setdefault(p, []).append(e)
    width = max(len(v) for v in per_prime.values())
    chain = []
    for pos in range(width):
        d = 1
        for p, exps in per_prime.items():
            exps = sorted(exps, reverse=True)
            if pos < len(exps):
                d *= p ** exps[pos]
        chain.append(d)
    chain = tuple(sorted(d for d in chain if d >= 2))
    return FgAbelianGroup(0, chain)


def random_hom(rng, source, target, free_entry_range=4):
    """Uniform-ish random hom: column j is a random element of the
    d_j-torsion of the target (anything, for a free source generator)."""
    m = zeros(target.ngens, source.ngens)
    t_orders = target.orders
    for j, d in enumerate(source.orders):
        for i, e in enumerate(t_orders):
            if d == 0:
                m[i, j] = rng.randint(-free_entry_range, free_entry_range) if e == 0 else rng.randrange(e)
            else:
                if e == 0:
                    m[i, j] = 0
                else:
                    g = math.gcd(e, d)
                    m[i, j] = (e // g) * rng.randrange(g)
    return GroupHom(source, target, m)
