"""Fixed-point matrices of the geometric raising and lowering operators.

The weight-(n-2k) space is modelled by the total space Y of the scaled
Hom(C^n, tau) bundle over Gr(k, n).  Raising and lowering act through the
one-step correspondence W whose torus-fixed points are nested pairs
S_small < S_big differing by one index b.  Push-pull against the kernel
localizes to a matrix over the fraction field: the (S_t, S_s) entry is
the kernel value at the pair divided by the Euler class of the source
tangent space, which collapses to

    twist * e(T_{S_t} Y_target - T_W)

with all cancellation done at the character level, so no rational-function
division beyond the final Euler class is ever needed.  The twist is the
restriction of det(tau) on the big side for raising and of x_b^(n - k_big)
for lowering.

Lowering is normalized by the global unit q^(2n) / (x_1 ... x_n); with it
the commutator of the two functors is the scalar
(-1)^(n-k-1) * (1 - q^(2n)) on each weight block, matching the algebra
side after E is scaled by q^(-n) and F by (-1)^(n-k-1) q^(2n).
"""

from math import comb

from .grassmann import (
    Character,
    det_tau_restrict,
    euler_class_rf,
    fixed_points,
    hom_fiber,
    tangent_gr,
    weight_monomial,
)
from .linalg import (
    SingularMatrixError,
    certify_invertible,
    column_basis,
    columns,
    hstack,
    invert_matrix,
)
from .matrix import Matrix
from .poly import Monomial, Poly
from .ratfunc import RationalFunction
from .report import Report
from .superrep import block_matrix, weight_block_words


def k_of(n, weight):
    """Number of odd tensor slots for the given weight; may fall outside
    [0, n], in which case the corresponding block is empty."""
    if (n - weight) % 2:
        raise ValueError(f"weight {weight} has wrong parity for n={n}")
    return (n - weight) // 2


def correspondence_pairs(n, k_small):
    """Fixed points of the one-step correspondence: nested pairs."""
    out = []
    for Sb in fixed_points(n, k_small + 1):
        for b in Sb:
            out.append((tuple(i for i in Sb if i != b), Sb))
    return out


def correspondence_tangent(n, S_small, S_big):
    """Tangent character of the correspondence at a nested fixed pair.

    Flag part: the small Grassmannian directions plus the line spanned by
    b moving inside the quotient by S_big.  Fiber part: the scaled Hom
    bundle through the small space.
    """
    small = set(S_small)
    big = set(S_big)
    extra = big - small
    if len(extra) != 1 or not small <= big:
        raise ValueError("expected nested subsets differing by one index")
    b = next(iter(extra))
    line = [weight_monomial(n, (j,), (b,)) for j in range(1, n + 1) if j not in big]
    return tangent_gr(n, S_small) + Character.from_monomials(line) + hom_fiber(n, S_small)


def _transfer_index(S_small, S_big):
    return next(iter(set(S_big) - set(S_small)))


def _twist(n, S_small, S_big, raising):
    if raising:
        return det_tau_restrict(n, S_big)
    b = _transfer_index(S_small, S_big)
    e = n - len(S_big)
    return Monomial(tuple(e if i + 1 == b else 0 for i in range(n)), 0)


def kernel_value(n, S_small, S_big, raising):
    """Kernel class at the fixed pair: twist times e(N_W), with
    N_W = T(Y_source) + T(Y_target) - T(W) restricted to the pair."""
    S_src, S_tgt = (S_big, S_small) if raising else (S_small, S_big)
    nW = (
        tangent_gr(n, S_src)
        + hom_fiber(n, S_src)
        + tangent_gr(n, S_tgt)
        + hom_fiber(n, S_tgt)
        - correspondence_tangent(n, S_small, S_big)
    )
    tw = RationalFunction.from_poly(_twist(n, S_small, S_big, raising).to_poly())
    return tw * euler_class_rf(nW, n + 1)


def _pair_entry(n, S_small, S_big, raising):
    S_tgt = S_small if raising else S_big
    char = (
        tangent_gr(n, S_tgt)
        + hom_fiber(n, S_tgt)
        - correspondence_tangent(n, S_small, S_big)
    )
    tw = RationalFunction.from_poly(_twist(n, S_small, S_big, raising).to_poly())
    return tw * euler_class_rf(char, n + 1)


def lowering_unit(n):
    """The unit q^(2n) / (x_1 ... x_n) applied to every lowering matrix."""
    return RationalFunction.from_poly(Monomial((-1,) * n, 2 * n).to_poly())


class FunctorMatrix:
    """Localized matrix of an operator between two weight models.

    Rows are indexed by the target fixed points and columns by the source
    fixed points, both in subset-lex order, matching the tensor basis
    order of the weight blocks on the algebra side.
    """

    __slots__ = ("n", "source_weight", "target_weight", "cols_points", "rows_points", "mat")

    def __init__(self, n, source_weight, target_weight, mat):
        self.n = n
        self.source_weight = source_weight
        self.target_weight = target_weight
        self.cols_points = fixed_points(n, k_of(n, source_weight))
        self.rows_points = fixed_points(n, k_of(n, target_weight))
        if mat.nrows != len(self.rows_points) or mat.ncols != len(self.cols_points):
            raise ValueError("matrix shape does not match the weight blocks")
        self.mat = mat

    @classmethod
    def zeros(cls, n, source_weight, target_weight):
        nr = len(fixed_points(n, k_of(n, target_weight)))
        nc = len(fixed_points(n, k_of(n, source_weight)))
        return cls(
            n,
            source_weight,
            target_weight,
            Matrix.zeros(nr, nc, RationalFunction.zero(n + 1)),
        )

    @classmethod
    def identity(cls, n, weight):
        d = len(fixed_points(n, k_of(n, weight)))
        one = RationalFunction.one(n + 1)
        return cls(
            n, weight, weight, Matrix.identity(d, one, RationalFunction.zero(n + 1))
        )

    def entry(self, S_t, S_s):
        return self.mat[(self.rows_points.index(tuple(S_t)), self.cols_points.index(tuple(S_s)))]

    def _same_shape(self, other):
        if self.n != other.n:
            raise ValueError("mixed n")
        if (
            self.source_weight != other.source_weight
            or self.target_weight != other.target_weight
        ):
            raise ValueError("weight mismatch")

    def __add__(self, other):
        self._same_shape(other)
        return FunctorMatrix(self.n, self.source_weight, self.target_weight, self.mat + other.mat)

    def __sub__(self, other):
        self._same_shape(other)
        return FunctorMatrix(self.n, self.source_weight, self.target_weight, self.mat - other.mat)

    def __neg__(self):
        return FunctorMatrix(self.n, self.source_weight, self.target_weight, -self.mat)

    def scale(self, s):
        return FunctorMatrix(self.n, self.source_weight, self.target_weight, self.mat.scale(s))

    def __matmul__(self, other):
        if self.n != other.n:
            raise ValueError("mixed n")
        if self.source_weight != other.target_weight:
            raise ValueError(
                f"cannot compose: left source weight {self.source_weight} "
                f"!= right target weight {other.target_weight}"
            )
        return FunctorMatrix(
            self.n, other.source_weight, self.target_weight, self.mat @ other.mat
        )

    def __eq__(self, other):
        if not isinstance(other, FunctorMatrix):
            return NotImplemented
        return (
            self.n == other.n
            and self.source_weight == other.source_weight
            and self.target_weight == other.target_weight
            and self.mat == other.mat
        )

    def is_zero(self):
        return self.mat.is_zero()

    def to_json(self):
        def label(S):
            return ",".join(str(i) for i in S)

        entries = {}
        for i, St in enumerate(self.rows_points):
            for j, Ss in enumerate(self.cols_points):
                v = self.mat[(i, j)]
                if not v.is_zero():
                    entries[f"{label(St)}|{label(Ss)}"] = str(v)
        return {
            "n": self.n,
            "source_weight": self.source_weight,
            "target_weight": self.target_weight,
            "rows": [label(S) for S in self.rows_points],
            "cols": [label(S) for S in self.cols_points],
            "entries": entries,
        }

    def __str__(self):
        head = (
            f"FunctorMatrix n={self.n} "
            f"weight {self.source_weight} -> {self.target_weight}"
        )
        return head + "\n" + str(self.mat)


def raising_matrix(n, source_weight):
    """Localized matrix of the raising functor from the given weight."""
    k = k_of(n, source_weight)
    out = FunctorMatrix.zeros(n, source_weight, source_weight + 2)
    for j, Ss in enumerate(out.cols_points):
        sset = set(Ss)
        for i, St in enumerate(out.rows_points):
            if set(St) <= sset:
                out.mat.rows[i][j] = _pair_entry(n, St, Ss, raising=True)
    return out


def lowering_matrix(n, source_weight, normalized=True):
    """Localized matrix of the lowering functor from the given weight."""
    out = FunctorMatrix.zeros(n, source_weight, source_weight - 2)
    u = lowering_unit(n) if normalized else None
    for j, Ss in enumerate(out.cols_points):
        sset = set(Ss)
        for i, St in enumerate(out.rows_points):
            if sset <= set(St):
                v = _pair_entry(n, Ss, St, raising=False)
                out.mat.rows[i][j] = v * u if normalized else v
    return out


def epsilon_sign(n, k):
    return 1 if (n - k) % 2 else -1


def commutator_scalar(n, k):
    """(-1)^(n-k-1) * (1 - q^(2n)) in the fraction field."""
    nvars = n + 1
    p = Poly.one(nvars) - Poly.q(nvars, 2 * n)
    if epsilon_sign(n, k) < 0:
        p = -p
    return RationalFunction(nvars, p)


def commutator_matrix(n, weight, normalized=True):
    """FE - EF on the weight block, built from the localized matrices."""
    fe = lowering_matrix(n, weight + 2, normalized) @ raising_matrix(n, weight)
    ef = raising_matrix(n, weight - 2) @ lowering_matrix(n, weight, normalized)
    return fe - ef


def _weights(n, max_weight):
    ws = [n - 2 * k for k in range(n + 1)]
    if max_weight is None:
        return ws
    return [w for w in ws if abs(w) <= max_weight]


def nilpotency_report(n, max_weight=None):
    rep = Report(f"geometric nilpotency at n={n}")
    for w in _weights(n, max_weight):
        ee = raising_matrix(n, w + 2) @ raising_matrix(n, w)
        rep.add(
            f"raising twice from weight {w} vanishes",
            ee.is_zero(),
            "" if ee.is_zero() else str(ee),
        )
        ff = lowering_matrix(n, w - 2) @ lowering_matrix(n, w)
        rep.add(
            f"lowering twice from weight {w} vanishes",
            ff.is_zero(),
            "" if ff.is_zero() else str(ff),
        )
    return rep


def commutator_report(n, max_weight=None):
    """Checks FE - EF = eps * (1 - q^(2n)) Id per weight block and records
    the observed sign against the parity (-1)^(n-k-1)."""
    rep = Report(f"geometric commutator scalars at n={n}")
    base = RationalFunction(n + 1, Poly.one(n + 1) - Poly.q(n + 1, 2 * n))
    for w in _weights(n, max_weight):
        k = k_of(n, w)
        d = commutator_matrix(n, w)
        dim = comb(n, k)
        eps = None
        for cand in (1, -1):
            s = base if cand > 0 else -base
            if d == FunctorMatrix.identity(n, w).scale(s):
                eps = cand
                break
        pred = epsilon_sign(n, k)
        rep.add(
            f"weight {w} commutator is a (1-q^{2*n}) scalar on a dim-{dim} block",
            eps is not None,
            "" if eps is not None else str(d),
        )
        if eps is not None:
            rep.add(
                f"weight {w} sign matches (-1)^(n-k-1)",
                eps == pred,
                "" if eps == pred else f"observed {eps:+d}, parity {pred:+d}",
            )
            rep.note(f"weight {w}: epsilon={eps:+d}, parity (-1)^(n-k-1)={pred:+d}")
    return rep


def algebra_matrix(n, gen, source_weight, normalized=True):
    """Algebra generator on a weight block, in the geometric index order.

    Normalization: E picks up q^(-n) and F picks up (-1)^(n-k-1) q^(2n),
    where k is taken at the source weight; with these units the algebra
    and geometry commutator scalars agree block by block.
    """
    if gen not in ("E", "F"):
        raise ValueError("only E and F have functor counterparts")
    step = 2 if gen == "E" else -2
    nvars = n + 1
    words = weight_block_words(n, source_weight)
    if not words:
        return FunctorMatrix.zeros(n, source_weight, source_weight + step)
    mat = block_matrix(n, gen, source_weight).to_rational(nvars)
    if normalized:
        if gen == "E":
            mat = mat.scale(RationalFunction.q(nvars, -n))
        else:
            k = k_of(n, source_weight)
            s = RationalFunction.q(nvars, 2 * n)
            if epsilon_sign(n, k) < 0:
                s = -s
            mat = mat.scale(s)
    return FunctorMatrix(n, source_weight, source_weight + step, mat)


def scalar_block(n, weight, q_exp):
    """q^q_exp times the identity on the weight block."""
    return FunctorMatrix.identity(n, weight).scale(RationalFunction.q(n + 1, q_exp))


def normalized_family(n, weight):
    """The four normalized generators on one weight block: E and F as
    localized functor matrices, K central as q^n, H grading as q^weight."""
    return {
        "E": algebra_matrix(n, "E", weight),
        "F": algebra_matrix(n, "F", weight),
        "K": scalar_block(n, weight, n),
        "H": scalar_block(n, weight, weight),
    }


def normalized_rep_report(n, max_weight=None):
    """Full relation battery for the normalized algebra blocks: nilpotency,
    the commutator scalar matching the geometric one, K centrality, and the
    H-grading conjugation."""
    rep = Report(f"normalized algebra blocks at n={n}")
    q2 = RationalFunction.q(n + 1, 2)
    for w in _weights(n, max_weight):
        k = k_of(n, w)
        ee = algebra_matrix(n, "E", w + 2) @ algebra_matrix(n, "E", w)
        rep.add(f"E^2 vanishes from weight {w}", ee.is_zero(), witness_str(ee))
        ff = algebra_matrix(n, "F", w - 2) @ algebra_matrix(n, "F", w)
        rep.add(f"F^2 vanishes from weight {w}", ff.is_zero(), witness_str(ff))
        d = algebra_matrix(n, "F", w + 2) @ algebra_matrix(n, "E", w) - (
            algebra_matrix(n, "E", w - 2) @ algebra_matrix(n, "F", w)
        )
        target = FunctorMatrix.identity(n, w).scale(commutator_scalar(n, k))
        ok = d == target
        rep.add(f"FE - EF is eps*(1-q^{2*n}) at weight {w}", ok, witness_str(d, ok))
        e = algebra_matrix(n, "E", w)
        f = algebra_matrix(n, "F", w)
        ke = scalar_block(n, w + 2, n) @ e - e @ scalar_block(n, w, n)
        rep.add(f"K is central through E at weight {w}", ke.is_zero(), witness_str(ke))
        he = scalar_block(n, w + 2, w + 2) @ e - (e @ scalar_block(n, w, w)).scale(q2)
        rep.add(
            f"H conjugation scales E by q^2 at weight {w}",
            he.is_zero(),
            witness_str(he),
        )
        hf = scalar_block(n, w - 2, w - 2) @ f - (f @ scalar_block(n, w, w)).scale(
            RationalFunction.q(n + 1, -2)
        )
        rep.add(
            f"H conjugation scales F by q^-2 at weight {w}",
            hf.is_zero(),
            witness_str(hf),
        )
    return rep


def witness_str(m, ok=None):
    ok = m.is_zero() if ok is None else ok
    return "" if ok else str(m)


def _image_basis(fm):
    """Columns spanning the image of an idempotent block operator."""
    piv = column_basis(fm.mat)
    return columns(fm.mat, piv)


def find_intertwiner(n, seed=0xC0FFEE):
    """Builds a block-diagonal intertwiner from the normalized algebra
    action to the geometric one, one invertible matrix per weight.

    Each weight block splits under the idempotent p = FE / scalar into
    the image of p and a complement which E maps isomorphically onto the
    image of p one weight lower... more precisely E carries im(p) at
    weight w to a complement of im(p) at weight w+2.  Matching the two
    splittings and transporting along E produces an intertwiner; any
    basis choice works, so the pivot columns of p are used.

    Returns (phi, report) where phi maps each weight to a Matrix over the
    fraction field.
    """
    rep = Report(f"intertwiner at n={n}")
    one = RationalFunction.one(n + 1)

    e_norm = {}
    e_geom = {}
    f_norm = {}
    f_geom = {}
    for k in range(n + 1):
        w = n - 2 * k
        e_norm[w] = algebra_matrix(n, "E", w)
        f_norm[w] = algebra_matrix(n, "F", w)
        e_geom[w] = raising_matrix(n, w)
        f_geom[w] = lowering_matrix(n, w)

    basis_n = {}
    basis_g = {}
    proj_n = {}
    proj_g = {}
    ok_bases = True
    for k in range(n, -1, -1):
        w = n - 2 * k
        s = commutator_scalar(n, k).inv()
        p_n = (f_norm.get(w + 2, algebra_matrix(n, "F", w + 2)) @ e_norm[w]).scale(s)
        p_g = (f_geom.get(w + 2, lowering_matrix(n, w + 2)) @ e_geom[w]).scale(s)
        pn_cols = _image_basis(p_n)
        pg_cols = _image_basis(p_g)
        proj_n[w] = pn_cols
        proj_g[w] = pg_cols
        if pn_cols.ncols != pg_cols.ncols:
            rep.add(
                f"projector ranks agree at weight {w}",
                False,
                f"normalized rank {pn_cols.ncols}, geometric rank {pg_cols.ncols}",
            )
            ok_bases = False
            continue
        low = n - 2 * (k + 1)
        if k + 1 <= n:
            bn = hstack(pn_cols, e_norm[low].mat @ proj_n[low])
            bg = hstack(pg_cols, e_geom[low].mat @ proj_g[low])
        else:
            bn, bg = pn_cols, pg_cols
        basis_n[w] = bn
        basis_g[w] = bg
        full = bn.ncols == bn.nrows and bg.ncols == bg.nrows
        rep.add(
            f"transported bases fill the weight-{w} block",
            full,
            "" if full else f"{bn.ncols} columns for a dim-{bn.nrows} block",
        )
        ok_bases = ok_bases and full

    if not ok_bases:
        return {}, rep

    phi = {}
    for k in range(n + 1):
        w = n - 2 * k
        try:
            phi[w] = basis_g[w] @ invert_matrix(basis_n[w], one)
        except SingularMatrixError as err:
            rep.add(f"basis change at weight {w} is invertible", False, str(err))
            return {}, rep
        # full symbolic inversion of phi is needlessly heavy; an exact
        # nonzero determinant at a sample point already proves invertibility
        ok, why = certify_invertible(phi[w], n + 1, seed=seed)
        rep.add(f"phi at weight {w} is invertible", ok, "" if ok else why)

    for k in range(n + 1):
        w = n - 2 * k
        if w + 2 in phi:
            lhs = phi[w + 2] @ e_norm[w].mat
            rhs = e_geom[w].mat @ phi[w]
            ok = lhs == rhs
            rep.add(
                f"phi intertwines E at weight {w}",
                ok,
                "" if ok else str(lhs - rhs),
            )
        if w - 2 in phi:
            lhs = phi[w - 2] @ f_norm[w].mat
            rhs = f_geom[w].mat @ phi[w]
            ok = lhs == rhs
            rep.add(
                f"phi intertwines F at weight {w}",
                ok,
                "" if ok else str(lhs - rhs),
            )
    return phi, rep


def intertwiner_report(n, seed=0xC0FFEE):
    return find_intertwiner(n, seed)[1]
