"""Modules over the structure-constant algebras.

A module is one action matrix per algebra generator; everything else --
tensor products through the coproduct, duals through the antipode, hom
spaces, radical/socle, projective covers and the full decomposition into
indecomposables -- is exact linear algebra on those matrices.

Decomposition strategy: over K2-type algebras the projective summands
are split off first (the top odd word acts nonzero exactly on them, and
the generated free submodule splits because the algebra is
self-injective); the remainder is handled by the endomorphism-algebra
meataxe: Fitting splits on sampled endomorphisms, then the trace-form
radical of End(M) with idempotent lifting as the certified fallback.
Over DK1 the central involution bc splits the module first.
"""

from __future__ import annotations

from .errors import AlgebraMismatch, GreenRingError, NonSplitField
from .hopf import build_km, get_algebra, jacobson_radical
from .ratlin import (ONE, Rat, RatMatrix, SpanRREF, ZERO, block_diag,
                     kernel_basis, kronecker_product, rat_from_str,
                     rat_to_str, sparse_kernel)

_radical_cache = {}


def algebra_radical(algebra):
    """Cached radical basis (dense vectors) of an algebra."""
    if algebra.name not in _radical_cache:
        _radical_cache[algebra.name] = jacobson_radical(algebra)
    return _radical_cache[algebra.name]


class ModuleRep:
    """A module: one dim x dim action matrix per algebra generator."""

    def __init__(self, algebra, dim, actions):
        self.algebra = algebra
        self.dim = dim
        self.actions = dict(actions)
        for lbl, _ in algebra.generators:
            if lbl not in self.actions:
                raise ValueError(f"missing action for generator {lbl}")
        self._word_actions = {}

    def gen_action(self, label):
        return self.actions[label]

    def word_action(self, k):
        """Action matrix of the k-th basis word of the algebra."""
        m = self._word_actions.get(k)
        if m is None:
            word = self.algebra.words[k]
            m = RatMatrix.identity(self.dim)
            for g in word:
                m = m * self.actions[self.algebra.gen_labels[g]]
            self._word_actions[k] = m
        return m

    def elem_action(self, vec):
        """Action of an algebra element given as sparse dict idx -> Rat."""
        out = RatMatrix.zeros(self.dim, self.dim)
        for k, c in vec.items():
            out = out + self.word_action(k).scale(c)
        return out

    def to_json_dict(self):
        return {
            "algebra": self.algebra.name,
            "dim": self.dim,
            "actions": {lbl: [[rat_to_str(v) for v in row]
                              for row in self.actions[lbl].to_rows()]
                        for lbl, _ in self.algebra.generators},
        }

    @classmethod
    def from_json_dict(cls, d):
        algebra = get_algebra(d["algebra"])
        actions = {lbl: RatMatrix.from_rows(
            [[rat_from_str(v) for v in row] for row in rows])
            for lbl, rows in d["actions"].items()}
        return cls(algebra, int(d["dim"]), actions)

    def __repr__(self):
        return f"ModuleRep({self.algebra.name}, dim={self.dim})"


def _same_algebra(*mods):
    names = {m.algebra.name for m in mods}
    if len(names) > 1:
        raise AlgebraMismatch(f"modules over different algebras: {names}")


def trivial_module(algebra):
    """The tensor unit: every generator acts by its counit scalar."""
    actions = {}
    for g, (lbl, _) in enumerate(algebra.generators):
        c = algebra.counit[algebra.index[(g,)]]
        actions[lbl] = RatMatrix.diagonal([c])
    return ModuleRep(algebra, 1, actions)


def zero_module(algebra):
    actions = {lbl: RatMatrix.zeros(0, 0) for lbl, _ in algebra.generators}
    return ModuleRep(algebra, 0, actions)


def regular_module(algebra):
    """Left regular module: generators act by left multiplication."""
    n = algebra.dim
    actions = {}
    for g, (lbl, _) in enumerate(algebra.generators):
        gi = algebra.index[(g,)]
        data = {}
        for j in range(n):
            for i, v in algebra.mult[(gi, j)].items():
                data[(i, j)] = v
        actions[lbl] = RatMatrix(n, n, data)
    return ModuleRep(algebra, n, actions)


class ModuleReport:
    """check_module outcome: every structure-constant identity, exactly."""

    def __init__(self, ok, failures):
        self.ok = ok
        self.failures = failures

    def __bool__(self):
        return self.ok

    def __repr__(self):
        if self.ok:
            return "ModuleReport(pass)"
        return f"ModuleReport(fail: {self.failures[:3]}...)"


def check_module(m):
    """Exact check that the actions define a module.

    Verifies rho(w_i) rho(w_j) = rho(w_i w_j) on all basis words and that
    the unit acts as the identity, which covers every defining relation.
    """
    failures = []
    a = m.algebra
    if m.elem_action(a.unit) != RatMatrix.identity(m.dim):
        failures.append("unit does not act as identity")
    for i in range(a.dim):
        for j in range(a.dim):
            lhs = m.word_action(i) * m.word_action(j)
            rhs = m.elem_action(a.mult[(i, j)])
            if lhs != rhs:
                failures.append(
                    f"{a.basis_labels[i]} * {a.basis_labels[j]}")
    return ModuleReport(not failures, failures)


def tensor(m, n):
    """Tensor product along the coproduct of the common algebra."""
    _same_algebra(m, n)
    a = m.algebra
    actions = {}
    for g, (lbl, _) in enumerate(a.generators):
        acc = RatMatrix.zeros(m.dim * n.dim, m.dim * n.dim)
        for (p, q), c in a.comult[a.index[(g,)]].items():
            acc = acc + kronecker_product(m.word_action(p),
                                          n.word_action(q)).scale(c)
        actions[lbl] = acc
    return ModuleRep(a, m.dim * n.dim, actions)


def dual(m):
    """Dual module: rho*(g) = transpose of rho(S(g))."""
    a = m.algebra
    actions = {}
    for g, (lbl, _) in enumerate(a.generators):
        s = a.antipode[a.index[(g,)]]
        actions[lbl] = m.elem_action(s).transpose()
    return ModuleRep(a, m.dim, actions)


def direct_sum(mods, algebra=None):
    """Block-diagonal direct sum; empty input needs the algebra argument."""
    if not mods:
        if algebra is None:
            raise ValueError("empty direct sum needs an explicit algebra")
        return zero_module(algebra)
    _same_algebra(*mods)
    a = mods[0].algebra
    actions = {lbl: block_diag([m.actions[lbl] for m in mods])
               for lbl, _ in a.generators}
    return ModuleRep(a, sum(m.dim for m in mods), actions)


class HomBasis:
    """Basis of intertwiners source -> target, in echelon normal form."""

    def __init__(self, source, target, basis):
        self.source = source
        self.target = target
        self.basis = basis

    def __len__(self):
        return len(self.basis)

    def __iter__(self):
        return iter(self.basis)

    def __getitem__(self, k):
        return self.basis[k]


def hom_basis(m, n):
    """All T with T rho_M(g) = rho_N(g) T, as a HomBasis.

    The unknown T is vectorized row-major over (target row, source col)
    and the intertwining constraints are solved as one sparse system.
    """
    _same_algebra(m, n)
    dm, dn = m.dim, n.dim
    if dm == 0 or dn == 0:
        return HomBasis(m, n, [])
    rows = {}
    for lbl, _ in m.algebra.generators:
        am = m.actions[lbl]
        an = n.actions[lbl]
        for (j, b), v in am.data.items():
            for i in range(dn):
                key = (lbl, i, b)
                r = rows.setdefault(key, {})
                u = i * dm + j
                nv = r.get(u, ZERO) + v
                if nv:
                    r[u] = nv
                else:
                    del r[u]
        for (i, k), v in an.data.items():
            for b in range(dm):
                key = (lbl, i, b)
                r = rows.setdefault(key, {})
                u = k * dm + b
                nv = r.get(u, ZERO) - v
                if nv:
                    r[u] = nv
                else:
                    del r[u]
    vecs = sparse_kernel(list(rows.values()), dn * dm)
    basis = []
    for v in vecs:
        data = {}
        for u, val in enumerate(v):
            if val:
                data[divmod(u, dm)] = val
        basis.append(RatMatrix(dn, dm, data))
    return HomBasis(m, n, basis)


def radical_vectors(m):
    """Basis of rad(M) = J(A).M as dense vectors (echelon form)."""
    span = SpanRREF(m.dim)
    for jvec in algebra_radical(m.algebra):
        sparse = {k: v for k, v in enumerate(jvec) if v}
        mat = m.elem_action(sparse)
        for col in mat.col_dicts():
            vec = [ZERO] * m.dim
            for i, v in col.items():
                vec[i] = v
            span.add(vec)
    return span.basis_vectors()


def socle_vectors(m):
    """Basis of soc(M) = {v : J(A).v = 0}."""
    rows = []
    for jvec in algebra_radical(m.algebra):
        sparse = {k: v for k, v in enumerate(jvec) if v}
        mat = m.elem_action(sparse)
        rows.extend(mat.row_dicts())
    return sparse_kernel(rows, m.dim)


def submodule(m, vectors, close=True):
    """Submodule spanned by the given vectors.

    Returns (sub, inclusion) where inclusion maps sub coordinates into M.
    With close=True the span is first closed under all generator actions.
    """
    span = SpanRREF(m.dim)
    for v in vectors:
        span.add(v)
    if close:
        frontier = span.basis_vectors()
        while frontier:
            new = []
            for v in frontier:
                for lbl, _ in m.algebra.generators:
                    w = m.actions[lbl].apply(v)
                    if span.add(w):
                        new.append(w)
            frontier = new
    basis = span.basis_vectors()
    d = len(basis)
    incl = RatMatrix.from_columns(basis, rows=m.dim)
    actions = {}
    for lbl, _ in m.algebra.generators:
        cols = [span.coordinates(m.actions[lbl].apply(b)) for b in basis]
        actions[lbl] = RatMatrix.from_columns(cols, rows=d)
    return ModuleRep(m.algebra, d, actions), incl


def quotient_module(m, vectors, close=True):
    """Quotient of M by the submodule spanned by vectors.

    Returns (quot, projection) with projection a (dim quot) x (dim M)
    matrix; the quotient carrier is the non-pivot coordinates of the
    subspace in reduced echelon form.
    """
    span = SpanRREF(m.dim)
    for v in vectors:
        span.add(v)
    if close:
        frontier = span.basis_vectors()
        while frontier:
            new = []
            for v in frontier:
                for lbl, _ in m.algebra.generators:
                    w = m.actions[lbl].apply(v)
                    if span.add(w):
                        new.append(w)
            frontier = new
    pivots = set(span.pivot_cols())
    free = [j for j in range(m.dim) if j not in pivots]
    d = len(free)
    pos = {j: k for k, j in enumerate(free)}

    def project(vec):
        res = span.reduce(vec)
        out = [ZERO] * d
        for c, v in res.items():
            out[pos[c]] = v
        return out

    proj_cols = []
    for j in range(m.dim):
        e = [ZERO] * m.dim
        e[j] = ONE
        proj_cols.append(project(e))
    proj = RatMatrix.from_columns(proj_cols, rows=d)
    actions = {}
    for lbl, _ in m.algebra.generators:
        cols = []
        for j in free:
            e = [ZERO] * m.dim
            e[j] = ONE
            cols.append(project(m.actions[lbl].apply(e)))
        actions[lbl] = RatMatrix.from_columns(cols, rows=d)
    return ModuleRep(m.algebra, d, actions), proj


# ---------------------------------------------------------------------
# K2-type <-> DK1 transport (algebra-level; the r0 checks live in indec)


def dk1_as_k2_actions(m):
    """View a DK1 module with equal group-like actions as a K2 module."""
    return ModuleRep(build_km(2), m.dim, {
        "K": m.actions["b"],
        "x1": m.actions["a"],
        "x2": m.actions["d"],
    })


def k2_as_dk1_actions(m):
    """Inflate a K2 module to DK1 (both group-likes act as K)."""
    from .hopf import build_dk1
    return ModuleRep(build_dk1(), m.dim, {
        "a": m.actions["x1"],
        "b": m.actions["K"],
        "c": m.actions["K"],
        "d": m.actions["x2"],
    })


# ---------------------------------------------------------------------
# projective covers


_principal_proj_cache = {}


def principal_projective(algebra, r):
    """P(r) = A.e_r for a K-type algebra, e_r = (1 + (-1)^r K)/2."""
    key = (algebra.name, r)
    if key in _principal_proj_cache:
        return _principal_proj_cache[key]
    reg = regular_module(algebra)
    n = algebra.dim
    sign = ONE if r == 0 else -ONE
    e = [ZERO] * n
    e[algebra.index[()]] = Rat(1, 2)
    e[algebra.index[(0,)]] = sign * Rat(1, 2)
    sub, incl = submodule(reg, [e])
    # remember the algebra elements realizing the canonical basis
    _principal_proj_cache[key] = (sub, incl)
    return sub, incl


def _k_eigen_split(mat, dim):
    """Eigenvectors of an involution matrix, as (plus_basis, minus_basis)."""
    ident = RatMatrix.identity(dim)
    plus = kernel_basis(mat - ident)
    minus = kernel_basis(mat + ident)
    return plus, minus


def projective_cover(m):
    """Projective cover (P, cover map) of a nonzero module.

    P matches the simple multiplicities of M / rad M and the cover is a
    surjective intertwiner with kernel inside rad P.
    """
    if m.dim == 0:
        raise ValueError("zero module has no projective cover")
    if m.algebra.name == "DK1":
        return _projective_cover_dk1(m)
    return _projective_cover_ktype(m)


def _projective_cover_ktype(m):
    algebra = m.algebra
    rad = radical_vectors(m)
    head, proj = quotient_module(m, rad, close=False)
    kh = head.actions["K"]
    plus, minus = _k_eigen_split(kh, head.dim)
    span = SpanRREF(m.dim)
    for v in rad:
        span.add(v)
    pivots = set(span.pivot_cols())
    free = [j for j in range(m.dim) if j not in pivots]
    pieces = []
    cover_blocks = []
    for r, eigvecs in ((0, plus), (1, minus)):
        sign = ONE if r == 0 else -ONE
        for hv in eigvecs:
            # lift the head eigenvector, then project onto the K-eigenspace
            v0 = [ZERO] * m.dim
            for k, j in enumerate(free):
                v0[j] = hv[k]
            kv = m.actions["K"].apply(v0)
            v = [(v0[i] + sign * kv[i]) / 2 for i in range(m.dim)]
            proj_mod, incl = principal_projective(algebra, r)
            cols = []
            for bcol in incl.col_dicts():
                # basis vector of P(r), as an algebra element, applied to v
                cols.append(m.elem_action(dict(bcol)).apply(v))
            cover_blocks.append(RatMatrix.from_columns(cols, rows=m.dim))
            pieces.append(proj_mod)
    p = direct_sum(pieces, algebra=algebra)
    cov = cover_blocks[0] if cover_blocks else RatMatrix.zeros(m.dim, 0)
    for b in cover_blocks[1:]:
        cov = cov.hstack(b)
    if cov.rank() != m.dim:
        raise GreenRingError("projective cover map failed to be surjective")
    return p, cov


def _projective_cover_dk1(m):
    bc = m.actions["b"] * m.actions["c"]
    ident = RatMatrix.identity(m.dim)
    if bc == ident:
        k2 = dk1_as_k2_actions(m)
        p, cov = _projective_cover_ktype(k2)
        return k2_as_dk1_actions(p), cov
    plus = kernel_basis(bc - ident)
    minus = kernel_basis(bc + ident)
    if not plus:
        # purely Steinberg-isotypic: semisimple projective, covers itself
        return m, RatMatrix.identity(m.dim)
    sub_p, incl_p = submodule(m, plus, close=False)
    sub_m, incl_m = submodule(m, minus, close=False)
    p1, cov1 = _projective_cover_dk1(sub_p)
    p2, cov2 = _projective_cover_dk1(sub_m)
    p = direct_sum([p1, p2])
    cov = (incl_p * cov1).hstack(incl_m * cov2)
    return p, cov


def injective_hull(m):
    """Injective hull via duality: (I, embedding M -> I).

    The transpose of the cover P -> M* is a map out of the double dual,
    which carries the S^2-twisted action; S^2 is conjugation by the
    grouplike, so composing with its action gives the embedding M -> P*.
    """
    p, cov = projective_cover(dual(m))
    grouplike = m.actions["K" if m.algebra.name != "DK1" else "b"]
    return dual(p), cov.transpose() * grouplike


# ---------------------------------------------------------------------
# decomposition


def _top_word_index(algebra):
    """Index of the full odd word x1...xm of a K-type algebra."""
    mgen = len(algebra.gen_labels) - 1
    return algebra.index[tuple(range(1, mgen + 1))]


def _peel_projectives(m):
    """Split off the free part of a K-type module.

    Returns (projective_summands, remainder_module) where the remainder
    is the quotient by the free part; valid because the algebra is
    self-injective, so the generated free submodule splits off.
    """
    algebra = m.algebra
    mgen = len(algebra.gen_labels) - 1
    top = m.word_action(_top_word_index(algebra))
    if top.is_zero():
        return [], m
    k_act = m.actions["K"]
    span = SpanRREF(m.dim)
    targets = []  # (eigen sign of w, basis vector w of im(top))
    for col in top.col_dicts():
        vec = [ZERO] * m.dim
        for i, v in col.items():
            vec[i] = v
        kv = k_act.apply(vec)
        for sign in (ONE, -ONE):
            comp = [(vec[i] + sign * kv[i]) / 2 for i in range(m.dim)]
            if any(comp) and span.add(comp):
                targets.append((sign, comp))
    gens = []
    n_basis = []
    summands = []
    for wsign, w in targets:
        x0, _ = _solve_matrix(top, w)
        kx = k_act.apply(x0)
        usign = wsign if mgen % 2 == 0 else -wsign
        u = [(x0[i] + usign * kx[i]) / 2 for i in range(m.dim)]
        r = 0 if usign == ONE else 1
        sub, incl = submodule(m, [u])
        if sub.dim != 2 ** mgen:
            raise GreenRingError("free submodule has wrong dimension")
        summands.append(sub)
        n_basis.extend(incl.transpose().to_rows())
        gens.append((r, u))
    remainder, _ = quotient_module(m, n_basis, close=False)
    return summands, remainder


def _solve_matrix(a, b):
    from .ratlin import solve_linear
    x0, _ = solve_linear(a, b)
    return x0, None


def decompose(m):
    """Indecomposable direct summands of M (a list of ModuleRep)."""
    if m.dim == 0:
        return []
    if m.algebra.name == "DK1":
        return _decompose_dk1(m)
    if m.algebra.name.startswith("K"):
        summands, rest = _peel_projectives(m)
        if summands:
            return summands + decompose(rest)
    return _meataxe(m)


def _decompose_dk1(m):
    bc = m.actions["b"] * m.actions["c"]
    ident = RatMatrix.identity(m.dim)
    if bc == ident:
        # equal group-like actions: the K2 decomposition transports back
        return [k2_as_dk1_actions(s) for s in decompose(dk1_as_k2_actions(m))]
    plus = kernel_basis(bc - ident)
    if not plus:
        return _meataxe(m)
    minus = kernel_basis(bc + ident)
    sub_p, _ = submodule(m, plus, close=False)
    sub_m, _ = submodule(m, minus, close=False)
    return _decompose_dk1(sub_p) + _decompose_dk1(sub_m)


def _fitting_candidates(endos):
    """Deterministic endomorphism sample for Fitting splits."""
    for t in endos:
        yield t
    k = len(endos)
    for i in range(k):
        for j in range(i + 1, k):
            yield endos[i] + endos[j]
    for i in range(k):
        for j in range(k):
            if i != j:
                yield endos[i] * endos[j]
    # fixed pseudo-random small combinations
    state = 1
    for _ in range(10):
        coeffs = []
        for _ in range(k):
            state = (state * 1103515245 + 12345) % (1 << 31)
            coeffs.append(Rat((state >> 16) % 5 - 2))
        t = RatMatrix.zeros(endos[0].rows, endos[0].cols)
        for c, e in zip(coeffs, endos):
            if c:
                t = t + e.scale(c)
        yield t


def _meataxe(m):
    """End(M)-driven decomposition of a module with no free part."""
    endos = hom_basis(m, m).basis
    if len(endos) == 1:
        return [m]
    for theta in _fitting_candidates(endos):
        n = theta.power(m.dim)
        r = n.rank()
        if 0 < r < m.dim:
            img_cols = []
            for col in n.col_dicts():
                vec = [ZERO] * m.dim
                for i, v in col.items():
                    vec[i] = v
                img_cols.append(vec)
            sub_u, _ = submodule(m, img_cols, close=False)
            sub_w, _ = submodule(m, kernel_basis(n), close=False)
            if sub_u.dim + sub_w.dim != m.dim:
                continue
            return decompose(sub_u) + decompose(sub_w)
    return _meataxe_idempotent(m, endos)


class _FiniteAlgebra:
    """Structure constants of a subalgebra of matrices (e.g. End(M))."""

    def __init__(self, mats):
        self.mats = mats
        self.n = len(mats)
        self.basis_matrix = RatMatrix.from_columns(
            [self._vec(t) for t in mats],
            rows=mats[0].rows * mats[0].cols)

    @staticmethod
    def _vec(t):
        out = [ZERO] * (t.rows * t.cols)
        for (i, j), v in t.data.items():
            out[i * t.cols + j] = v
        return out

    def coords(self, t):
        from .ratlin import solve_linear
        return solve_linear(self.basis_matrix, self._vec(t))[0]

    def multiply_coords(self, x, y):
        t = RatMatrix.zeros(self.mats[0].rows, self.mats[0].cols)
        for i, ci in enumerate(x):
            if ci:
                t = t + self.mats[i].scale(ci)
        s = RatMatrix.zeros(self.mats[0].rows, self.mats[0].cols)
        for j, cj in enumerate(y):
            if cj:
                s = s + self.mats[j].scale(cj)
        return self.coords(t * s)

    def structure(self):
        tab = {}
        for i in range(self.n):
            ei = [ZERO] * self.n
            ei[i] = ONE
            for j in range(self.n):
                ej = [ZERO] * self.n
                ej[j] = ONE
                tab[(i, j)] = self.multiply_coords(ei, ej)
        return tab


def _algebra_trace_radical(tab, n):
    """Radical of a structure-constant algebra by the trace form."""
    def left_trace(coords):
        # trace of left multiplication by the element with these coords
        t = ZERO
        for i, ci in enumerate(coords):
            if not ci:
                continue
            for j in range(n):
                t += ci * tab[(i, j)][j]
        return t

    gram = {}
    for i in range(n):
        ei = [ZERO] * n
        ei[i] = ONE
        for j in range(n):
            prod = tab[(i, j)]
            t = left_trace(prod)
            if t:
                gram[(i, j)] = t
    return kernel_basis(RatMatrix(n, n, gram))


def _min_poly_coords(tab, n, x):
    """Monic minimal polynomial (coeff list, low degree first) of x."""
    span = SpanRREF(n)
    powers = []
    cur = _unit_coords(tab, n)
    while True:
        powers.append(cur)
        if not span.add(cur):
            break
        acc = [ZERO] * n
        for i, ci in enumerate(cur):
            if not ci:
                continue
            for j, cj in enumerate(x):
                if not cj:
                    continue
                prod = tab[(i, j)]
                for k, ck in enumerate(prod):
                    if ck:
                        acc[k] += ci * cj * ck
        cur = acc
    # powers[-1] = sum_j c_j powers[j]; solve the small linear system
    kept = powers[:-1]
    mat = RatMatrix.from_columns(kept, rows=n)
    from .ratlin import solve_linear
    sol, _ = solve_linear(mat, powers[-1])
    return [-c for c in sol] + [ONE]


def _unit_coords(tab, n):
    """Coordinates of the two-sided unit in a structure-constant algebra."""
    # e * b_j = b_j for all j: sum_i u_i tab[(i,j)] = e_j
    mat = {}
    for j in range(n):
        for i in range(n):
            col = tab[(i, j)]
            for k, v in enumerate(col):
                if v:
                    mat[(j * n + k, i)] = v
    b = [ZERO] * (n * n)
    for j in range(n):
        b[j * n + j] = ONE
    from .ratlin import solve_linear
    sol, _ = solve_linear(RatMatrix(n * n, n, mat), b)
    return sol


def _meataxe_idempotent(m, endos):
    """Certified route: trace-form radical of End(M), idempotent lifting."""
    alg = _FiniteAlgebra(endos)
    tab = alg.structure()
    n = alg.n
    rad = _algebra_trace_radical(tab, n)
    if n - len(rad) == 1:
        return [m]
    # quotient algebra on the non-pivot coordinates of the radical span
    span = SpanRREF(n)
    for v in rad:
        span.add(v)
    pivots = set(span.pivot_cols())
    free = [j for j in range(n) if j not in pivots]
    q = len(free)
    pos = {j: k for k, j in enumerate(free)}

    def project(vec):
        res = span.reduce(vec)
        out = [ZERO] * q
        for c, v in res.items():
            out[pos[c]] = v
        return out

    def lift(qvec):
        out = [ZERO] * n
        for k, j in enumerate(free):
            out[j] = qvec[k]
        return out

    qtab = {}
    for i in range(q):
        for j in range(q):
            qtab[(i, j)] = project(_mul_coords(tab, n, lift(_e(q, i)),
                                               lift(_e(q, j))))
    samples = []
    for i in range(q):
        samples.append(_e(q, i))
    for i in range(q):
        for j in range(i + 1, q):
            samples.append([a + b for a, b in zip(_e(q, i), _e(q, j))])
    for x in samples:
        e_q = _split_idempotent(qtab, q, x)
        if e_q is None:
            continue
        # lift to End(M) and make it exactly idempotent by Newton steps
        e_mat = RatMatrix.zeros(m.dim, m.dim)
        for k, c in enumerate(lift(e_q)):
            if c:
                e_mat = e_mat + endos[k].scale(c)
        for _ in range(2 * n):
            sq = e_mat * e_mat
            if sq == e_mat:
                break
            e_mat = sq.scale(3) - (sq * e_mat).scale(2)
        else:
            continue
        if e_mat.is_zero() or e_mat == RatMatrix.identity(m.dim):
            continue
        img_cols = []
        for col in e_mat.col_dicts():
            vec = [ZERO] * m.dim
            for i, v in col.items():
                vec[i] = v
            img_cols.append(vec)
        sub_u, _ = submodule(m, img_cols, close=False)
        sub_w, _ = submodule(m, kernel_basis(e_mat), close=False)
        if sub_u.dim + sub_w.dim != m.dim or not sub_u.dim or not sub_w.dim:
            continue
        return decompose(sub_u) + decompose(sub_w)
    raise NonSplitField(
        "could not split a decomposable module; endomorphism residue "
        "field is probably not rational")


def _e(n, i):
    v = [ZERO] * n
    v[i] = ONE
    return v


def _mul_coords(tab, n, x, y):
    acc = [ZERO] * n
    for i, ci in enumerate(x):
        if not ci:
            continue
        for j, cj in enumerate(y):
            if not cj:
                continue
            for k, ck in enumerate(tab[(i, j)]):
                if ck:
                    acc[k] += ci * cj * ck
    return acc


def _split_idempotent(qtab, q, x):
    """A nontrivial idempotent of a split semisimple algebra from x.

    Works through the minimal polynomial: if it has at least two coprime
    irreducible factors f and g=p/f, Bezout u f + v g = 1 makes (v g)(x)
    an idempotent killing the f-primary part.  Returns None when the
    minimal polynomial of x is irreducible (or x is scalar-like).
    """
    import sympy

    coeffs = _min_poly_coords(qtab, q, x)
    t = sympy.Symbol("t")
    poly = sympy.Poly([sympy.Rational(str(c)) for c in reversed(coeffs)], t,
                      domain="QQ")
    factors = poly.factor_list()[1]
    if len(factors) < 2:
        return None
    f = factors[0][0] ** factors[0][1]
    g = poly.quo(f)
    u, v, one = sympy.Poly.gcdex(f, g)
    if not one.is_one:
        return None
    vg = (v * g).rem(poly)
    # evaluate vg at x inside the quotient algebra
    unit = _unit_coords(qtab, q)
    result = [ZERO] * q
    power = unit
    cs = list(reversed(vg.all_coeffs()))  # low degree first
    for k, c in enumerate(cs):
        if c != 0:
            cr = Rat(int(sympy.numer(c)), int(sympy.denom(c)))
            result = [a + cr * b for a, b in zip(result, power)]
        if k + 1 < len(cs):
            power = _mul_coords(qtab, q, power, x)
    e2 = _mul_coords(qtab, q, result, result)
    if e2 != result or not any(result):
        return None
    if result == unit:
        return None
    return result


# ---------------------------------------------------------------------
# isomorphism testing


def is_isomorphic(m, n):
    """(bool, witness): an invertible intertwiner M -> N if one exists.

    Tries hom basis elements, then a fixed deterministic sequence of
    combinations, then exhaustive small-coefficient sums for small hom
    spaces.  Backed by the dimension criterion for indecomposables.
    """
    if m.algebra.name != n.algebra.name or m.dim != n.dim:
        return False, None
    if m.dim == 0:
        return True, RatMatrix.zeros(0, 0)
    homs = hom_basis(m, n).basis
    if not homs:
        return False, None

    def try_t(t):
        return t.rank() == m.dim

    for t in homs:
        if try_t(t):
            return True, t
    state = 7
    for _ in range(10):
        t = RatMatrix.zeros(n.dim, m.dim)
        for h in homs:
            state = (state * 1103515245 + 12345) % (1 << 31)
            c = Rat((state >> 16) % 7 - 3)
            if c:
                t = t + h.scale(c)
        if try_t(t):
            return True, t
    if len(homs) <= 5:
        from itertools import product as iproduct
        for coeffs in iproduct((0, 1, -1, 2), repeat=len(homs)):
            if all(c == 0 for c in coeffs):
                continue
            t = RatMatrix.zeros(n.dim, m.dim)
            for c, h in zip(coeffs, homs):
                if c:
                    t = t + h.scale(Rat(c))
            if try_t(t):
                return True, t
    return False, None
