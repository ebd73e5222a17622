"""Prime spectra of finite-rank valuation rings and semilocal intersections.

For a value group of rank ``r`` the primes are indexed ``0..r``: index ``i``
corresponds to the convex subgroup ``H_i`` of elements whose first ``i``
lattice coordinates vanish, so ``0`` is the zero ideal and ``r`` the maximal
ideal.  A value-group map ``phi`` induces the spectral map through
``P_k(S) -> P_j(V)`` with ``phi^-1(H_k) = H_j``.
"""

from dataclasses import dataclass, field

from .errors import BranchNotContent, IndexOutOfRange, NegativeValueComponent, NotContentExtension
from .valuation import (
    INFINITY,
    ValueCutIdeal,
    content_of_value,
    is_content_extension,
    maximal_extension_check,
)


@dataclass(frozen=True)
class PrimeChainPoset:
    rank: int
    branch: object = None

    @property
    def primes(self):
        return list(range(self.rank + 1))

    def height(self, i):
        if not 0 <= i <= self.rank:
            raise IndexOutOfRange(f"prime index {i} outside 0..{self.rank}")
        return i

    def leq(self, i, j):
        return i <= j

    def to_json(self):
        return {"rank": self.rank, "primes": [{"branch": self.branch, "level": i} for i in self.primes]}


def spec_chain(r):
    if r < 0:
        raise ValueError("rank must be nonnegative")
    return PrimeChainPoset(r)


def _columns(phi):
    return phi.lattice_columns()


def contraction_index(phi, k):
    """Index ``j`` of the prime of ``V`` below the prime ``k`` of ``S``."""
    cols = _columns(phi)
    r = len(cols)
    if not 0 <= k <= r:
        raise IndexOutOfRange(f"prime index {k} outside 0..{r}")
    j = r
    # walk down while the basis vector e_(j-1) still lands in H_k
    while j > 0 and all(x == 0 for x in cols[j - 1][:k]):
        j -= 1
    return j


def extension_index(phi, j):
    """Index of ``P_j S`` when it is a prime of ``S``, else ``None``.

    ``P_j S`` consists of the values dominating some ``phi(g)`` with ``g``
    positive outside ``H_j``; it is the prime ``P_j`` of ``S`` exactly when
    the lattice step at coordinate ``j - 1`` is preserved.
    """
    diag = phi.lattice_diagonal()
    r = len(diag)
    if not 0 <= j <= r:
        raise IndexOutOfRange(f"prime index {j} outside 0..{r}")
    if j == 0 or diag[j - 1] == 1:
        return j
    return None


@dataclass
class SpecMap:
    source: PrimeChainPoset
    target: PrimeChainPoset
    mapping: dict

    def to_json(self):
        return {"pairs": [[k, j] for k, j in sorted(self.mapping.items())]}


def spec_map(e):
    rs = e.target.group.rank
    rv = e.base.group.rank
    mapping = {k: contraction_index(e.phi, k) for k in range(rs + 1)}
    return SpecMap(spec_chain(rs), spec_chain(rv), mapping)


@dataclass
class SpecMapReport:
    is_bijective: bool
    is_homeomorphism: bool
    extended_primes: dict
    spec_map: SpecMap

    def to_json(self):
        return {
            "is_bijective": self.is_bijective,
            "is_homeomorphism": self.is_homeomorphism,
            "extended_primes": [[j, k] for j, k in sorted(self.extended_primes.items())],
            "map": self.spec_map.to_json(),
        }


def _require(e):
    if not is_content_extension(e):
        raise NotContentExtension(f"{e.phi.describe()} is not an isomorphism")


def spec_map_check(e):
    """Bijectivity and order isomorphism of ``Spec S -> Spec V``."""
    _require(e)
    m = spec_map(e)
    values = [m.mapping[k] for k in m.source.primes]
    bijective = sorted(values) == m.target.primes
    homeo = bijective and all(
        (a <= b) == (m.mapping[a] <= m.mapping[b]) for a in m.source.primes for b in m.source.primes
    )
    extended = {j: extension_index(e.phi, j) for j in m.target.primes}
    for k in m.source.primes:
        if extended[m.mapping[k]] != k:
            raise AssertionError(f"prime {k} of S is not extended from V")
    return SpecMapReport(bijective, homeo, extended, m)


@dataclass
class HeightReport:
    ht_p: int
    ht_pS: int
    equal: bool

    def to_json(self):
        return {"ht_p": self.ht_p, "ht_pS": self.ht_pS, "equal": self.equal}


def height_check(e, i):
    _require(e)
    chain = spec_chain(e.base.group.rank)
    ht_p = chain.height(i)
    k = extension_index(e.phi, i)
    if k is None:
        raise AssertionError(f"prime {i} does not extend to a prime")
    ht_pS = spec_chain(e.target.group.rank).height(k)
    if ht_p != ht_pS:
        raise AssertionError(f"height of prime {i} changes: {ht_p} vs {ht_pS}")
    return HeightReport(ht_p, ht_pS, True)


@dataclass
class DimReport:
    lhs: int
    rhs: int
    equal: bool
    fiber: int = 0

    def to_json(self):
        return {"lhs": self.lhs, "rhs": self.rhs, "fiber_dimension": self.fiber, "equal": self.equal}


def _fiber_dimension(m, j):
    """Length of the chain of primes of ``S`` lying over the prime ``j``."""
    over = [k for k, t in m.mapping.items() if t == j]
    return max(len(over) - 1, 0)


def dim_formula_check(e, P):
    """``dim S_P = dim V_p + dim of the fiber`` at a prime ``P`` of ``S``."""
    _require(e)
    m = spec_map(e)
    lhs = m.source.height(P)
    j = m.mapping[P]
    fiber = len([k for k, t in m.mapping.items() if t == j and k <= P]) - 1
    rhs = m.target.height(j) + fiber
    if lhs != rhs:
        raise AssertionError(f"dimension formula fails at prime {P}: {lhs} vs {rhs}")
    return DimReport(lhs, rhs, True, fiber)


@dataclass
class BoundReport:
    bound: int
    dim_S: int
    holds: bool
    t: list = field(default_factory=list)

    def to_json(self):
        return {"bound": self.bound, "dim_S": self.dim_S, "holds": self.holds, "t": self.t}


def dimension_bound(e):
    """``dim S <= sum of t_i`` with ``t_i = max(1, fiber dimension over p_i)``."""
    rv = e.base.group.rank
    m = spec_map(e)
    t = [max(1, _fiber_dimension(m, i)) for i in range(rv + 1)]
    dim_S = e.target.group.rank
    bound = sum(t)
    return BoundReport(bound, dim_S, dim_S <= bound, t)


# semilocal model -------------------------------------------------------------------


@dataclass
class SemilocalModel:
    """``R = V_1 cap ... cap V_n`` and ``S = W_1 cap ... cap W_n``.

    The branches are taken to be pairwise independent and every vector of
    nonnegative values is taken to be realized by an element; both are
    modelling assumptions, not checked facts.
    """

    branches: list
    independent: bool = True

    @property
    def primes(self):
        out = [(None, 0)]
        for b, e in enumerate(self.branches):
            out.extend((b, level) for level in range(1, e.base.group.rank + 1))
        return out

    @property
    def target_primes(self):
        out = [(None, 0)]
        for b, e in enumerate(self.branches):
            out.extend((b, level) for level in range(1, e.target.group.rank + 1))
        return out

    def maximal_ideals(self):
        return [(b, e.base.group.rank) for b, e in enumerate(self.branches)]

    def dimension(self):
        return max((e.base.group.rank for e in self.branches), default=0)

    def to_json(self):
        return {
            "branches": [e.to_json() for e in self.branches],
            "independence": "assumed",
            "primes": [{"branch": b, "level": lv} for b, lv in self.primes],
            "maximal_ideals": [{"branch": b, "level": lv} for b, lv in self.maximal_ideals()],
        }


def semilocal_build(branches):
    branches = list(branches)
    for i, e in enumerate(branches):
        if not is_content_extension(e):
            raise BranchNotContent(f"branch {i} ({e.describe()}) is not a content extension")
    return SemilocalModel(branches)


def maximal_extensions(model):
    """``M_i S = N_i`` for every branch."""
    return [maximal_extension_check(e) for e in model.branches]


def semilocal_content_vector(g, model):
    """Componentwise content cuts of an element with value vector ``g``."""
    if len(g) != len(model.branches):
        raise ValueError(f"expected {len(model.branches)} components")
    out = []
    for i, (w, e) in enumerate(zip(g, model.branches)):
        if w is not INFINITY:
            w = e.target.group.coerce(w)
            if w < e.target.group.zero():
                raise NegativeValueComponent(f"component {i} is negative")
        ideal = content_of_value(w, e)
        if not ideal.extend(e.phi).contains_value(w):
            raise AssertionError(f"component {i} is not in its content times S")
        out.append(ideal)
    maximal_extensions(model)
    return out


__all__ = [
    "PrimeChainPoset",
    "SpecMap",
    "SemilocalModel",
    "ValueCutIdeal",
    "spec_chain",
    "spec_map",
    "spec_map_check",
    "height_check",
    "dim_formula_check",
    "dimension_bound",
    "semilocal_build",
    "semilocal_content_vector",
    "contraction_index",
    "extension_index",
]
