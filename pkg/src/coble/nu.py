"""Fixed-point planes of Heisenberg lifts, restriction of the 43 invariant
sextics to them, and the assembled restriction map nu with exact rank and
kernel over Q(w).

Chart conventions (mode "annexe")
---------------------------------
* 4 "diagonal" charts: for (r,s) in (0,1),(1,0),(1,1),(1,2) the coordinates
  Z_ij with r*i + s*j != 0 mod 3 vanish on the plane; the three survivors
  become Y0, Y1, Y2 in row-major order.
* 36 substitution charts: for each shift direction d in 01, 10, 11, 12 and
  each character (u,v), the phase tables below (copied bit for bit from the
  source computation) express every Z_ij as w^k * Y_m.

Mode "all_lifts" instead builds, for every nonzero class eta of A[3] mod +-
and each of the three central lifts, an adapted basis of the eigenvalue-1
eigenspace of the 9x9 action matrix, and charts all 120 of them.

Restricted sextics are coordinatized in the 4-dimensional invariant basis
S1 = sum Y_i^6, S2 = sum Y_i^3 Y_j^3, S3 = Y0 Y1 Y2 * sum Y_i^3,
S4 = Y0^2 Y1^2 Y2^2; a second, independent row extraction (the coefficients
of Y0^2, Y0^3, Y0^4, Y0^6 after setting Y1 = Y2 = 1) is kept for
cross-validation and must give the same rank.
"""

from __future__ import annotations

from .fields import QW, Eisenstein, omega_pow
from .heisenberg import (COORDS, COORD_INDEX, Apoint, HeisenbergElement,
                         action_matrix, add2, apoint_classes_mod_sign,
                         coord_name, dot, neg2, theta_ring)
from .invariants import iota_act, pinned_basis
from .linalg import ExactMatrix
from .poly import NotInSpan, PolyRing, coefficient_in_basis


class EigenspaceDimensionError(Exception):
    pass


Y_RING = PolyRing(QW, ("Y0", "Y1", "Y2"))


def s_basis(ring=Y_RING):
    y0, y1, y2 = ring.var("Y0"), ring.var("Y1"), ring.var("Y2")
    s1 = y0 ** 6 + y1 ** 6 + y2 ** 6
    s2 = y0 ** 3 * y1 ** 3 + y0 ** 3 * y2 ** 3 + y1 ** 3 * y2 ** 3
    s3 = y0 * y1 * y2 * (y0 ** 3 + y1 ** 3 + y2 ** 3)
    s4 = y0 ** 2 * y1 ** 2 * y2 ** 2
    return [s1, s2, s3, s4]


S_BASIS = s_basis()

DIAGONAL_RS = [(0, 1), (1, 0), (1, 1), (1, 2)]

# Substitution tables: family direction -> {(i,j): (y_index, weights)} where
# the phase is w**(u*w1 + v*w2) for chart character (u,v).
SHIFT_TABLES = {
    (0, 1): {
        (0, 0): (0, (0, 0)), (0, 1): (0, (0, 0)), (0, 2): (0, (0, 1)),
        (1, 0): (1, (0, 0)), (1, 1): (1, (1, 0)), (1, 2): (1, (2, 1)),
        (2, 0): (2, (0, 0)), (2, 1): (2, (2, 0)), (2, 2): (2, (1, 1)),
    },
    (1, 0): {
        (0, 0): (0, (0, 0)), (1, 0): (0, (0, 0)), (2, 0): (0, (1, 0)),
        (0, 1): (1, (0, 0)), (1, 1): (1, (0, 1)), (2, 1): (1, (1, 2)),
        (0, 2): (2, (0, 0)), (1, 2): (2, (0, 2)), (2, 2): (2, (1, 1)),
    },
    (1, 1): {
        (0, 0): (0, (0, 0)), (1, 1): (0, (0, 0)), (2, 2): (0, (1, 1)),
        (0, 1): (1, (0, 0)), (1, 2): (1, (0, 1)), (2, 0): (1, (1, 0)),
        (0, 2): (2, (0, 0)), (2, 1): (2, (1, 2)), (1, 0): (2, (0, 2)),
    },
    (1, 2): {
        (0, 0): (0, (0, 0)), (1, 2): (0, (0, 0)), (2, 1): (0, (1, 2)),
        (0, 1): (1, (0, 0)), (1, 0): (1, (0, 1)), (2, 2): (1, (1, 1)),
        (0, 2): (2, (0, 0)), (1, 1): (2, (0, 2)), (2, 0): (2, (1, 0)),
    },
}

FAMILY_ORDER = [(0, 1), (1, 0), (1, 1), (1, 2)]


class FixedPlaneChart:
    """A plane of fixed points: parametrization Z_b = sum_k basis[k][b] Y_k."""

    def __init__(self, family_tag, substitution, eta=None, lift_t=None):
        self.family_tag = family_tag
        # substitution: coord b -> None (vanishes) or (y_index, Eisenstein phase)
        self.substitution = substitution
        self.eta = eta
        self.lift_t = lift_t

    def basis_vectors(self):
        """Three 9-long coefficient vectors over Q(w)."""
        vecs = [[QW.zero()] * 9 for _ in range(3)]
        for b, img in self.substitution.items():
            if img is not None:
                k, phase = img
                vecs[k][COORD_INDEX[b]] = phase
        return vecs

    def assignment(self, ring):
        """Variable assignment restricting a theta polynomial, images in Y_RING."""
        sub = {}
        for b, img in self.substitution.items():
            if img is None:
                sub[coord_name(b)] = Y_RING.zero()
            else:
                k, phase = img
                sub[coord_name(b)] = Y_RING.var(f"Y{k}") * phase
        return sub

    def restrict(self, p):
        return p.substitute(self.assignment(p.ring), target_ring=Y_RING)

    def __repr__(self):
        return f"FixedPlaneChart({self.family_tag})"


def _diagonal_chart(r, s):
    survivors = [b for b in COORDS if (r * b[0] + s * b[1]) % 3 == 0]
    sub = {}
    for b in COORDS:
        if b in survivors:
            sub[b] = (survivors.index(b), QW.one())
        else:
            sub[b] = None
    eta = Apoint((0, 0), (r, s)).canonical_mod_sign()
    return FixedPlaneChart(f"diagonal({r},{s})", sub, eta=eta, lift_t=0)


def _shift_chart(direction, u, v):
    table = SHIFT_TABLES[direction]
    sub = {}
    for b, (k, (w1, w2)) in table.items():
        sub[b] = (k, omega_pow(u * w1 + v * w2))
    # The plane is fixed by lifts with translation part -direction.
    eta = Apoint(neg2(direction), (u, v)).canonical_mod_sign()
    d = f"{direction[0]}{direction[1]}"
    return FixedPlaneChart(f"shift({d},u={u},v={v})", sub, eta=eta)


def annexe_charts():
    """The 40 charts in pinned order: diagonals, then shift families with
    (u, v) row-major."""
    charts = [_diagonal_chart(r, s) for r, s in DIAGONAL_RS]
    for direction in FAMILY_ORDER:
        for u in range(3):
            for v in range(3):
                charts.append(_shift_chart(direction, u, v))
    return charts


def eigenspace_chart(eta, t):
    """Adapted eigenvalue-1 chart for the lift (t, x, x*) of eta."""
    g = HeisenbergElement(t, eta.x, eta.xstar)
    x = eta.x
    sub = {b: None for b in COORDS}
    if x == (0, 0):
        survivors = [b for b in COORDS if (t + dot(eta.xstar, b)) % 3 == 0]
        if len(survivors) != 3:
            raise EigenspaceDimensionError(f"{eta}, t={t}")
        for k, b in enumerate(survivors):
            sub[b] = (k, QW.one())
    else:
        # Group coordinates into the three <x>-cosets; each contributes one
        # eigenvalue-1 vector, with phases fixed by the cycle recurrence.
        seen = set()
        reps = []
        for b in COORDS:
            if b in seen:
                continue
            cyc = [b, add2(b, x), add2(b, add2(x, x))]
            seen.update(cyc)
            reps.append(b)
        if len(reps) != 3:
            raise EigenspaceDimensionError(f"{eta}, t={t}")
        for k, c in enumerate(reps):
            alpha = 0  # exponent of w; alpha_0 = 1
            point = c
            for m in range(3):
                sub[point] = (k, omega_pow(alpha))
                # alpha_{m+1} = alpha_m * w^-(t + x*.(c + m x))
                alpha -= t + dot(eta.xstar, point)
                point = add2(point, x)
    chart = FixedPlaneChart(f"lift(x={eta.x},xstar={eta.xstar},t={t})", sub,
                            eta=eta, lift_t=t)
    _verify_eigenvectors(chart, g)
    return chart


def _verify_eigenvectors(chart, g):
    m = action_matrix(g)
    for v in chart.basis_vectors():
        if m.mul_vector(v) != v:
            raise EigenspaceDimensionError(
                f"basis vector of {chart.family_tag} is not fixed by {g}")


def all_lift_charts():
    """120 charts: every nonzero class mod +- with each of its 3 lifts."""
    charts = []
    for eta in apoint_classes_mod_sign():
        for t in range(3):
            charts.append(eigenspace_chart(eta, t))
    return charts


def fixed_plane_charts(mode="annexe"):
    if mode == "annexe":
        return annexe_charts()
    if mode == "all_lifts":
        return all_lift_charts()
    raise ValueError(f"unknown mode {mode!r}")


def matching_lifts(chart):
    """All (sign, t) with sign in {+1, -1} such that the chart span is fixed
    pointwise by the lift (t, sign*eta).  Inverse pairs share their fixed
    space, so exactly one t per sign is expected."""
    vecs = chart.basis_vectors()
    out = []
    for sign, a in ((1, chart.eta), (-1, -chart.eta)):
        for t in range(3):
            g = HeisenbergElement(t, a.x, a.xstar)
            m = action_matrix(g)
            if all(m.mul_vector(v) == v for v in vecs):
                out.append((sign, t))
    return out


def find_matching_lift(chart):
    """One lift whose eigenvalue-1 space is the chart span, or None."""
    matches = matching_lifts(chart)
    if not matches:
        return None
    sign, t = matches[0]
    a = chart.eta if sign == 1 else -chart.eta
    return a, t


def k_eta_generators(eta):
    """Two classes generating K_eta = <eta>-perp / <eta> (with respect to the
    commutator pairing)."""
    from .heisenberg import weil_form
    span_eta = {(0, 0, 0, 0)}
    cur = eta
    for _ in range(2):
        span_eta.add(cur.key())
        cur = Apoint(add2(cur.x, eta.x), add2(cur.xstar, eta.xstar))
    perp = []
    for x0 in range(3):
        for x1 in range(3):
            for u in range(3):
                for v in range(3):
                    a = Apoint((x0, x1), (u, v))
                    if weil_form(a, eta) == 0:
                        perp.append(a)
    gens = []
    generated = set(span_eta)
    for a in perp:
        if a.key() in generated:
            continue
        gens.append(a)
        generated = {tuple((k[i] + m * a.key()[i]) % 3 for i in range(4))
                     for k in generated for m in range(3)}
        if len(gens) == 2:
            break
    return gens


def induced_plane_action(chart, g):
    """The exact 3x3 matrix A with g . v_k = sum_m A[m][k] v_m when g maps
    the chart plane to itself; None otherwise."""
    vecs = chart.basis_vectors()
    b = ExactMatrix(QW, [[vecs[k][i] for k in range(3)] for i in range(9)])
    m = action_matrix(g)
    cols = []
    for v in vecs:
        c = b.solve(m.mul_vector(v))
        if c is None:
            return None
        cols.append(c)
    return ExactMatrix(QW, [[cols[k][r] for k in range(3)] for r in range(3)])


def plane_action_preserves_s_span(a):
    """Does the coordinate change Y_m -> sum_k a[m][k] Y_k keep every S_i in
    span{S1..S4}?  Returns the 4x4 matrix of the induced action, or None."""
    images = [Y_RING.var(f"Y{k}") for k in range(3)]
    new_coords = []
    for mrow in range(3):
        acc = Y_RING.zero()
        for k in range(3):
            if a.entries[mrow][k]:
                acc = acc + images[k] * a.entries[mrow][k]
        new_coords.append(acc)
    sub = {f"Y{m}": new_coords[m] for m in range(3)}
    cols = []
    for s in S_BASIS:
        try:
            cols.append(coefficient_in_basis(s.substitute(sub), S_BASIS))
        except NotInSpan:
            return None
    return ExactMatrix(QW, [[cols[j][r] for j in range(4)] for r in range(4)])


def restrict_sextic(p, chart):
    """Coordinates of the restriction in the S1..S4 basis."""
    res = chart.restrict(p)
    if res.is_zero():
        return [QW.zero()] * 4
    return coefficient_in_basis(res, S_BASIS)


def hack_rows(res):
    """The source computation's row extraction: coefficients of Y0^2, Y0^3,
    Y0^4, Y0^6 after Y1 = Y2 = 1."""
    line = res.substitute({"Y1": 1, "Y2": 1})
    return [line.terms.get((k, 0, 0), QW.zero()) for k in (2, 3, 4, 6)]


class NuMatrix:
    def __init__(self, matrix, charts, labels, method):
        self.matrix = matrix          # ExactMatrix over Q(w), 4 rows per chart
        self.charts = charts
        self.labels = labels          # column labels T1..T43
        self.method = method


def assemble_nu(mode="annexe", method="sbasis", basis=None, progress=None):
    """Stack the per-chart coordinate rows of all 43 basis sextics."""
    ring = theta_ring()
    if basis is None:
        labels, elements = pinned_basis(ring, 6)
    else:
        labels, elements = basis.labels, basis.elements
    charts = fixed_plane_charts(mode)
    rows = []
    for ci, chart in enumerate(charts):
        if progress:
            progress(f"chart {ci + 1}/{len(charts)} ({chart.family_tag})")
        block = []
        for p in elements:
            res = chart.restrict(p)
            if method == "sbasis":
                col = ([QW.zero()] * 4 if res.is_zero()
                       else coefficient_in_basis(res, S_BASIS))
            elif method == "hack":
                col = hack_rows(res)
            else:
                raise ValueError(f"unknown method {method!r}")
            block.append(col)
        # block is 43 columns of 4 entries; transpose into 4 rows
        for r in range(4):
            rows.append([block[j][r] for j in range(len(elements))])
    return NuMatrix(ExactMatrix(QW, rows), charts, labels, method)


# ----- the Annexe's filter pipeline ---------------------------------------

def diagonal_filter_pipeline(basis=None):
    """Apply the four diagonal filters cumulatively; return the list of
    surviving-count stages and the indices (0-based) of the 30 survivors."""
    ring = theta_ring()
    if basis is None:
        labels, elements = pinned_basis(ring, 6)
    else:
        labels, elements = basis.labels, basis.elements
    surviving = list(range(len(elements)))
    counts = []
    for r, s in DIAGONAL_RS:
        zero_sub = {coord_name(b): 0 for b in COORDS
                    if (r * b[0] + s * b[1]) % 3 != 0}
        surviving = [i for i in surviving
                     if elements[i].substitute(zero_sub).is_zero()]
        counts.append(len(surviving))
    return counts, surviving


def annexe_subblock_kernel(basis=None, method="sbasis"):
    """The 36 shift charts restricted to the 30 filter survivors: exact rank
    and kernel, with kernel vectors re-expressed as T-label differences."""
    ring = theta_ring()
    if basis is None:
        labels, elements = pinned_basis(ring, 6)
    else:
        labels, elements = basis.labels, basis.elements
    counts, surviving = diagonal_filter_pipeline()
    charts = annexe_charts()[4:]
    rows = []
    for chart in charts:
        block = []
        for i in surviving:
            res = chart.restrict(elements[i])
            if method == "sbasis":
                col = ([QW.zero()] * 4 if res.is_zero()
                       else coefficient_in_basis(res, S_BASIS))
            else:
                col = hack_rows(res)
            block.append(col)
        for r in range(4):
            rows.append([block[j][r] for j in range(len(surviving))])
    m = ExactMatrix(QW, rows)
    rank, kernel = m.rank_and_kernel()
    kernel_labels = [{labels[surviving[j]]: c for j, c in enumerate(v) if c}
                     for v in kernel]
    return counts, rank, kernel, kernel_labels


# ----- full resolution ----------------------------------------------------

def _kernel_span_equals(field, kernel, candidates, n):
    """Do the kernel vectors span the same space as the candidate vectors?"""
    if len(kernel) != len(candidates):
        return False
    if not kernel:
        return True
    joint = ExactMatrix(field, kernel + candidates)
    return joint.rank() == len(kernel)


def candidate_vectors(labels, pairs):
    """Vectors for differences T_a - T_b given as (a_label, b_label) pairs."""
    out = []
    for plus, minus in pairs:
        v = [QW.zero()] * len(labels)
        v[labels.index(plus)] = QW.one()
        v[labels.index(minus)] = -QW.one()
        out.append(v)
    return out


ANNEXE_KERNEL_PAIRS = [("T11", "T10"), ("T14", "T13"), ("T17", "T16")]
TEXT_KERNEL_PAIRS = [("T8", "T7")] + ANNEXE_KERNEL_PAIRS


def nu_rank_and_kernel(mode="annexe", method="sbasis", progress=None):
    """Exact rank and kernel of the assembled nu matrix plus a report that
    resolves the rank-39 (4-element kernel) versus rank-40 (3-element kernel)
    discrepancy and certifies iota-anti-invariance of every kernel element."""
    nu = assemble_nu(mode=mode, method=method, progress=progress)
    rank, kernel = nu.matrix.rank_and_kernel()
    labels = nu.labels
    ring = theta_ring()
    _, elements = pinned_basis(ring, 6)

    def combine(vec):
        acc = ring.zero()
        for c, p in zip(vec, elements):
            if c:
                acc = acc + c * p
        return acc

    anti = all(iota_act(combine(v)) == -combine(v) for v in kernel)

    if _kernel_span_equals(QW, kernel, candidate_vectors(labels, TEXT_KERNEL_PAIRS), 43):
        verdict = "text: rank 39, kernel {T8-T7, T11-T10, T14-T13, T17-T16}"
    elif _kernel_span_equals(QW, kernel, candidate_vectors(labels, ANNEXE_KERNEL_PAIRS), 43):
        verdict = "annexe: rank 40, kernel {T11-T10, T14-T13, T17-T16}"
    else:
        verdict = "neither printed kernel"

    kernel_labels = [{labels[j]: c for j, c in enumerate(v) if c} for v in kernel]
    report = {
        "mode": mode,
        "method": method,
        "rows": nu.matrix.rows,
        "rank": rank,
        "kernel_dimension": len(kernel),
        "kernel": kernel_labels,
        "rank_nullity_ok": rank + len(kernel) == nu.matrix.cols,
        "kernel_iota_anti_invariant": anti,
        "verdict": verdict,
    }
    return rank, kernel, report
