"""Graded complexes of equivariant characters and their cone identities.

A GradedComplex stores, per cohomological degree, the character of that
term; homotopy data is not modeled, so a cone is the class-level operation
tgt + src[1].  The total class is the alternating sum over degrees, and
all identities here are checked at total-class level.

The interpolating complexes K^I twist the j-th exterior power by
(L^dual)^{d(I,j)} with d(I,j) = |I cap [1,j]|.  Sections may carry a
circle weight: section_q_weight = c puts q^(c j) on the degree -j term,
matching a differential of weight c.

Two iterated-cone routes rebuild K^{[1,N-k]} from the extreme complexes.
Walking the step profile of K^I as k tokens that climb off the top edge
(descending route), or N-k tokens that are injected at the bottom and
climb into place (ascending route), every single move is one cone whose
source is K(L^dual, f) tensored with a 2-term twist block; the executor
below performs exactly those moves and records the index ranges it used.
The ascending route accumulates one global L^dual twist per injected
token, which is where its overall (L^dual)^(k-N) twist comes from.
"""

from .grassmann import Character
from .poly import Monomial, Poly


def d_of(I, j):
    """Number of elements of I lying in [1, j]."""
    return sum(1 for i in I if 1 <= i <= j)


class GradedComplex:
    """Characters indexed by cohomological degree; equal degrees merge."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean = {}
        if terms:
            for d, char in terms.items():
                if char.weights:
                    clean[d] = char
        self.terms = clean

    @classmethod
    def from_triples(cls, triples):
        """Build from (degree, q_twist, character) entries."""
        acc = {}
        for d, qt, char in triples:
            if qt:
                n_x = _char_nx(char)
                char = char.twist(Monomial((0,) * n_x, qt))
            acc[d] = acc.get(d, Character.zero()) + char
        return cls(acc)

    def degrees(self):
        return sorted(self.terms)

    def term(self, d):
        return self.terms.get(d, Character.zero())

    def merge(self, other):
        acc = dict(self.terms)
        for d, char in other.terms.items():
            acc[d] = acc.get(d, Character.zero()) + char
        return GradedComplex(acc)

    def shift(self, n):
        """Homological shift [n]: cohomological degree d moves to d - n."""
        return GradedComplex({d - n: char for d, char in self.terms.items()})

    def twist(self, mono):
        return GradedComplex({d: char.twist(mono) for d, char in self.terms.items()})

    def total_class(self):
        total = Character.zero()
        for d, char in self.terms.items():
            total = total + (char if d % 2 == 0 else -char)
        return total

    def total_class_poly(self, nvars):
        return self.total_class().as_poly(nvars)

    def __eq__(self, other):
        if not isinstance(other, GradedComplex):
            return NotImplemented
        return self.terms == other.terms

    def dump_lines(self):
        if not self.terms:
            return ["<zero complex>"]
        return [f"deg {d:+d}: {self.terms[d]}" for d in self.degrees()]

    def __str__(self):
        return "\n".join(self.dump_lines())


def _char_nx(char):
    for w in char.weights:
        return len(w.x_exps)
    raise ValueError("cannot infer variable count from the zero character")


def _line_monomial(L):
    if isinstance(L, Monomial):
        return L
    if isinstance(L, Character):
        monos = L.monomial_list()
        if len(monos) != 1:
            raise ValueError("line bundle character must have rank 1")
        return monos[0]
    raise TypeError("expected a Monomial or rank-1 Character")


def koszul_complex(V, section_q_weight=0):
    """Exterior algebra resolution: degree -j term is Lambda^j of V^dual."""
    duals = V.dual().all_exterior_powers()
    return GradedComplex.from_triples(
        (-j, section_q_weight * j, duals[j]) for j in range(len(duals))
    )


def generalized_koszul(I, L, V, section_q_weight=0):
    """The interpolating complex: degree -j twisted by (L^dual)^{d(I,j)}."""
    ell_inv = _line_monomial(L).inverse()
    duals = V.dual().all_exterior_powers()
    return GradedComplex.from_triples(
        (-j, section_q_weight * j, duals[j].twist(ell_inv.power(d_of(I, j))))
        for j in range(len(duals))
    )


def cone_class(src, tgt):
    """Class of the cone on a map src -> tgt: tgt plus src shifted by one."""
    return tgt.merge(src.shift(1))


def _step_block(char_top, ell_inv, degree):
    """Two-term block at (degree, degree+1) with an L^dual on the lower leg.

    This is the class of K(L^dual, f) tensored with char_top placed so
    its untwisted copy sits in cohomological degree degree+1.
    """
    return GradedComplex.from_triples(
        [(degree, 0, char_top.twist(ell_inv)), (degree + 1, 0, char_top)]
    )


def proposition_source(I, i, L, V, section_q_weight=0):
    """Source complex of the one-step cone that moves i in I to i+1.

    Terms: degree -i carries Lambda^i V^dual (L^dual)^{d(I,i)} and degree
    -i+1 carries the same with one fewer L^dual; the class identity
    class(K^{I'}) = class(K^I) - class(source), I' = (I minus {i}) + {i+1},
    fixes the twist normalization.
    """
    if i not in I:
        raise ValueError(f"{i} is not in I")
    if i + 1 in I:
        raise ValueError(f"{i + 1} already in I")
    ell_inv = _line_monomial(L).inverse()
    lam = V.dual().exterior_power(i)
    d = d_of(I, i)
    n_x = _char_nx(lam) if lam.weights else len(ell_inv.x_exps)
    top = lam.twist(ell_inv.power(d - 1)).twist(Monomial((0,) * n_x, section_q_weight * i))
    return _step_block(top, ell_inv, -i)


def proposition_check(I, i, L, V, section_q_weight=0):
    """Verify the one-step cone identity at total-class level."""
    I = sorted(set(I))
    Iprime = sorted((set(I) - {i}) | {i + 1})
    lhs = generalized_koszul(Iprime, L, V, section_q_weight).total_class()
    src = proposition_source(I, i, L, V, section_q_weight)
    rhs = cone_class(src, generalized_koszul(I, L, V, section_q_weight)).total_class()
    return lhs == rhs, lhs, rhs


class IteratedCones:
    """Both iterated-cone presentations with their targets and index logs."""

    __slots__ = (
        "minus",
        "plus",
        "minus_indices",
        "plus_indices",
        "target_minus",
        "target_plus",
    )

    def __init__(self, minus, plus, minus_indices, plus_indices, target_minus, target_plus):
        self.minus = minus
        self.plus = plus
        self.minus_indices = minus_indices
        self.plus_indices = plus_indices
        self.target_minus = target_minus
        self.target_plus = target_plus

    def minus_matches(self):
        return self.minus.total_class() == self.target_minus.total_class()

    def plus_matches(self):
        return self.plus.total_class() == self.target_plus.total_class()


def iterated_cone_classes(N, k, L, V, section_q_weight=2):
    """Run both cone routes toward K^{[1,N-k]} and report the endpoints.

    The descending route starts from the fully twisted complex K^{[1,N]}
    and peels the top k steps; piece (a, p) is used while the a-th peeled
    token sits at position p, where its profile height is N-k+a.  The
    ascending route starts from the plain Koszul complex; token a first
    costs a bare (L^dual)^{-a} block (index (a, 1)) and then climbs with
    profile height 1 under an accumulated (L^dual)^{-a} global twist
    (indices (a, j), j >= 2).  Index ranges: descending a = 1..k with
    p = N-k+a..N; ascending a = 1..N-k with j = 1..N-k-a+1.
    """
    if not 0 <= k <= N:
        raise ValueError(f"need 0 <= k <= {N}, got {k}")
    if V.rank() != N:
        raise ValueError(f"V must have rank {N}")
    ell = _line_monomial(L)
    ell_inv = ell.inverse()
    P = N - k
    qw = section_q_weight
    duals = V.dual().all_exterior_powers()
    n_x = len(ell.x_exps)

    def lam_twisted(j, ell_power):
        return duals[j].twist(ell_inv.power(ell_power)).twist(Monomial((0,) * n_x, qw * j))

    # descending route: seed K^{[1,N]}, peel tokens top-first
    minus = generalized_koszul(range(1, N + 1), L, V, qw)
    minus_indices = []
    for a in range(k, 0, -1):
        for p in range(P + a, N + 1):
            piece = _step_block(lam_twisted(p, P + a - 1), ell_inv, -p)
            minus = cone_class(piece, minus)
            minus_indices.append((a, p))
    minus_indices.sort()

    # ascending route: seed the plain Koszul complex, inject then climb
    plus = koszul_complex(V, qw)
    plus_indices = []
    one = Character({Monomial((0,) * n_x, 0): 1})
    for a in range(1, P + 1):
        piece = _step_block(one.twist(ell.power(a)), ell_inv, 0)
        plus = cone_class(piece, plus)
        plus_indices.append((a, 1))
        for i in range(1, P - a + 1):
            piece = _step_block(lam_twisted(i, -a), ell_inv, -i)
            plus = cone_class(piece, plus)
            plus_indices.append((a, i + 1))

    target_minus = generalized_koszul(range(1, P + 1), L, V, qw)
    target_plus = target_minus.twist(ell.power(P))
    return IteratedCones(minus, plus, minus_indices, plus_indices, target_minus, target_plus)


def generic_bundle_data(N):
    """Rank-N bundle with weights x_1..x_N and an independent line x_{N+1}.

    The extra slot keeps the line-bundle class transcendental over the
    bundle weights, so endpoint identities are checked generically.
    """
    n_x = N + 1
    V = Character.from_monomials(
        Monomial(tuple(1 if t == i else 0 for t in range(n_x)), 0) for i in range(N)
    )
    L = Monomial(tuple(1 if t == N else 0 for t in range(n_x)), 0)
    return V, L


def endpoint_report(rank, section_q_weight=2):
    """Interpolation endpoints: an empty index set reproduces the plain
    complex, and the full set [1, rank] reproduces the complex of the
    L-twisted bundle, one L^dual per exterior degree."""
    from itertools import combinations

    from .report import Report

    V, L = generic_bundle_data(rank)
    rep = Report(f"interpolating complex endpoints, rank {rank}")
    plain = koszul_complex(V, section_q_weight)
    ok = generalized_koszul((), L, V, section_q_weight) == plain
    rep.add("empty index set gives the plain complex", ok, "" if ok else "terms differ")
    full = generalized_koszul(range(1, rank + 1), L, V, section_q_weight)
    twisted = koszul_complex(V.twist(L), section_q_weight)
    ok = full == twisted
    rep.add(
        "full index set gives the complex of the twisted bundle",
        ok,
        "" if ok else "terms differ",
    )
    good = 0
    total = 0
    bad = []
    for size in range(rank + 1):
        for I in combinations(range(1, rank + 1), size):
            for i in I:
                if i + 1 in I:
                    continue
                total += 1
                ok, _, _ = proposition_check(I, i, L, V, section_q_weight)
                good += ok
                if not ok:
                    bad.append((I, i))
    rep.add(
        f"one-step cone identity holds for all {total} valid (I, i)",
        good == total,
        "" if good == total else f"failing moves: {bad}",
    )
    return rep


def koszul_battery_report(rank, k, section_q_weight=2):
    """Endpoints, the one-step cone sweep, and both iterated routes."""
    from .report import Report

    rep = Report(f"koszul battery, rank {rank}, k={k}")
    rep.extend(endpoint_report(rank, section_q_weight))
    rep.extend(iterated_cone_report(rank, k, section_q_weight))
    return rep


def iterated_cone_report(N, k, section_q_weight=2):
    from .report import Report

    V, L = generic_bundle_data(N)
    res = iterated_cone_classes(N, k, L, V, section_q_weight)
    rep = Report(f"iterated cone routes, rank {N}, k={k}")
    ok = res.minus_matches()
    rep.add(
        "descending route reaches the interpolating complex",
        ok,
        "" if ok else "total classes differ",
    )
    ok = res.plus_matches()
    rep.add(
        "ascending route reaches it after the global twist",
        ok,
        "" if ok else "total classes differ",
    )
    rep.note(
        "descending indices (a,p): a=1..k, p=N-k+a..N; used "
        + (str(res.minus_indices) if res.minus_indices else "none")
    )
    rep.note(
        "ascending indices (a,j): a=1..N-k, j=1..N-k-a+1; used "
        + (str(res.plus_indices) if res.plus_indices else "none")
    )
    return rep
