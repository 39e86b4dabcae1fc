"""Registry of checkable claims used by ``hankel-lab verify``.

Each claim expands a set of parameter ranges into independent instances and
checks one instance at a time, returning :class:`Record` objects.  Instances
are plain dicts so they can be shipped to worker processes.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Callable

from . import conjecture, exactmat as em, favard, lucas, proof_engine as pe, structured as st
from .exactmat import ExactMatrix, det_bareiss
from .report import FAIL, PASS, Record
from .report import check as _check_scalar

Range = tuple[int, int]


@dataclass(frozen=True)
class Claim:
    name: str
    description: str
    defaults: dict
    quick: dict
    expand: Callable[[dict], list[dict]]
    run: Callable[[dict], list[Record]]
    axes: tuple = field(default=())


REGISTRY: dict[str, Claim] = {}


def claim(name, description, defaults, quick=None):
    """Register the (expand, run) pair returned by the decorated factory."""
    def register(factory):
        expand, run = factory() if callable(factory) else factory
        REGISTRY[name] = Claim(name, description, defaults, quick or defaults, expand, run,
                               tuple(defaults))
        return factory
    return register


def _span(r: Range):
    return range(r[0], r[1] + 1)


def _grid(ranges: dict, *axes) -> list[dict]:
    out = [{}]
    for axis in axes:
        out = [dict(p, **{axis: v}) for p in out for v in _span(ranges[axis])]
    return out


def _rng(name: str, params: dict) -> random.Random:
    return random.Random(f"{name}:{sorted(params.items())}")


def check(name: str, params: dict, lhs, rhs, detail: str = "") -> Record:
    """Like report.check, but matrices and polynomials are summarised compactly."""
    if isinstance(lhs, ExactMatrix) or isinstance(rhs, ExactMatrix):
        if not (isinstance(lhs, ExactMatrix) and isinstance(rhs, ExactMatrix)) or lhs.shape != rhs.shape:
            return Record(name, params, getattr(lhs, "shape", lhs), getattr(rhs, "shape", rhs), FAIL, "shape mismatch")
        return _entrywise(name, params, lhs, rhs)[0]
    if isinstance(lhs, (lucas.IntPolynomial, list, tuple)):
        return Record(name, params, str(lhs), str(rhs), PASS if lhs == rhs else FAIL, detail)
    return _check_scalar(name, params, lhs, rhs, detail)


def _entrywise(name: str, params: dict, lhs: ExactMatrix, rhs: ExactMatrix, window=None) -> list[Record]:
    """One record per instance; on mismatch the first differing entry is reported."""
    for i in range(lhs.nrows):
        for j in range(lhs.ncols):
            if window is not None and i + j > window:
                continue
            if lhs[i, j] != rhs[i, j]:
                return [Record(name, params, lhs[i, j], rhs[i, j], FAIL, f"first mismatch at ({i}, {j})")]
    return [Record(name, params, "matrix", "matrix", PASS)]


# -- random matrix helpers ----------------------------------------------------

def random_int_matrix(rng: random.Random, nrows: int, ncols: int | None = None, lo=-9, hi=9) -> ExactMatrix:
    ncols = nrows if ncols is None else ncols
    return ExactMatrix([[rng.randint(lo, hi) for _ in range(ncols)] for _ in range(nrows)])


def random_rank_matrix(rng: random.Random, n: int, rk: int) -> ExactMatrix:
    """Random n x n integer matrix of exact rank ``rk``."""
    while True:
        if rk == 0:
            return ExactMatrix.zeros(n)
        m = random_int_matrix(rng, n, rk, -3, 3) @ random_int_matrix(rng, rk, n, -3, 3)
        if em.rank(m) == rk:
            return m


def random_tridiagonal(rng: random.Random, n: int, lo=-5, hi=5) -> ExactMatrix:
    return em.tridiagonal([rng.randint(lo, hi) for _ in range(n - 1)],
                          [rng.randint(lo, hi) for _ in range(n)],
                          [rng.randint(lo, hi) for _ in range(n - 1)])


def random_poly(rng: random.Random, degree: int, monic=False, lo=-5, hi=5) -> lucas.IntPolynomial:
    coeffs = [rng.randint(lo, hi) for _ in range(degree)]
    top = 1 if monic else rng.choice([c for c in range(lo, hi + 1) if c])
    return lucas.IntPolynomial(coeffs + [top])


# -- listed small determinants ----------------------------------------------

INTRO_SEQUENCES = {
    0: [1, 1, 2, 4, 8],
    1: [1] * 15,
    2: [1, 1, -1, -1] * 4,
    3: [1, 1, -4, 3, 3, -8, 5, 5, -12, 7, 7, -16],
    4: [1, 1, -8, 8, 1, 1, -16, 16, 1, 1, -24, 24],
    5: [1, 1, -13, -16, 61, 9, 9, -178, -64, 370, 25, 25, -695, -144, 1127],
}


@claim("intro", "listed values of d_0 .. d_5", {"r": (0, 5)})
def _intro():
    def expand(rg):
        return [{"r": r, "N": n} for r in _span(rg["r"]) for n in range(len(INTRO_SEQUENCES[r]))]

    def run(p):
        return [check("intro", p, pe.d_r_direct(p["r"], p["N"]), INTRO_SEQUENCES[p["r"]][p["N"]])]
    return expand, run


# -- exact linear algebra ------------------------------------------------------

@claim("bareiss", "det_bareiss = det_cofactor on random integer matrices",
       {"N": (0, 7), "i": (0, 29)}, {"N": (0, 6), "i": (0, 4)})
def _bareiss():
    def run(p):
        m = random_int_matrix(_rng("bareiss", p), p["N"])
        return [check("bareiss", p, em.det_bareiss(m), em.det_cofactor(m))]
    return (lambda rg: _grid(rg, "N", "i")), run


@claim("adj", "rank of adj(M) is n, 1 or 0 as rank M is n, n-1 or less",
       {"N": (2, 6), "i": (0, 3)}, {"N": (2, 4), "i": (0, 0)})
def _adj():
    def run(p):
        n = p["N"]
        rng = _rng("adj", p)
        out = []
        for rk in range(n + 1):
            m = random_rank_matrix(rng, n, rk)
            adj = em.adjugate(m)
            expected = n if rk == n else 1 if rk == n - 1 else 0
            params = dict(p, rank=rk)
            out.append(check("adj", params, em.rank(adj), expected))
            out.append(check("adj-definition", params, adj, em.adjugate_by_cofactors(m)))
        return out
    return (lambda rg: _grid(rg, "N", "i")), run


@claim("block", "det [[A,B],[C,D]] = det(D) det(A - B D^-1 C)",
       {"N": (2, 8), "i": (0, 4)}, {"N": (2, 5), "i": (0, 0)})
def _block():
    def run(p):
        rng = _rng("block", p)
        n = p["N"]
        split = rng.randint(1, n - 1)
        a = random_int_matrix(rng, split)
        b = random_int_matrix(rng, split, n - split)
        c = random_int_matrix(rng, n - split, split)
        while True:
            d = random_int_matrix(rng, n - split)
            if det_bareiss(d):
                break
        whole = ExactMatrix.block([[a, b], [c, d]])
        return [check("block", dict(p, split=split), em.schur_block_det(a, b, c, d), det_bareiss(whole))]
    return (lambda rg: _grid(rg, "N", "i")), run


@claim("det-lemma", "det(A + u v^T) = det(A) + v^T adj(A) u, singular A included",
       {"N": (1, 8), "i": (0, 12)}, {"N": (1, 5), "i": (0, 1)})
def _det_lemma():
    def run(p):
        rng = _rng("det-lemma", p)
        n = p["N"]
        a = random_rank_matrix(rng, n, rng.randint(max(n - 2, 0), n)) if p["i"] % 2 else random_int_matrix(rng, n)
        u = random_int_matrix(rng, n, 1)
        v = random_int_matrix(rng, n, 1)
        params = dict(p, singular=det_bareiss(a) == 0)
        return [check("det-lemma", params, em.matrix_det_lemma(a, u, v), det_bareiss(a + u @ v.T))]
    return (lambda rg: _grid(rg, "N", "i")), run


@claim("corner", "p(T) and p(T + v v^T) agree where i + j <= 2(N-1) - deg p",
       {"N": (2, 10), "i": (0, 5)}, {"N": (2, 6), "i": (0, 1)})
def _corner():
    def run(p):
        rng = _rng("corner", p)
        n = p["N"]
        t = random_tridiagonal(rng, n)
        d = rng.randint(0, n - 1)
        poly = random_poly(rng, d, monic=True)
        v = em.basis_vector(n, n - 1)
        diff = lucas.eval_at_matrix(poly, t + v @ v.T) - lucas.eval_at_matrix(poly, t)
        return [check("corner", dict(p, d=d), em.is_k_small(diff, d), True)]
    return (lambda rg: _grid(rg, "N", "i")), run


# -- structured families ------------------------------------------------------

@claim("anan", "A_N A_N^T = (C(2i+2j+1, i+j))", {"N": (0, 40)}, {"N": (0, 12)})
def _anan():
    def run(p):
        n = p["N"]
        a = st.matrix_A(n)
        return _entrywise("anan", p, a @ a.T, st.hankel(st.SequenceSpec.binomial_shift(1), n))
    return (lambda rg: _grid(rg, "N")), run


@claim("angan", "A_N gamma^(k)_N A_N^T = (C(2i+2j+2, i+j+1-k))",
       {"N": (1, 25), "k": (1, 10)}, {"N": (1, 12), "k": (1, 4)})
def _angan():
    def run(p):
        n, k = p["N"], p["k"]
        a = st.matrix_A(n)
        expected = ExactMatrix.from_function(n, n, lambda i, j: st.binom(2 * i + 2 * j + 2, i + j + 1 - k))
        return _entrywise("angan", p, a @ st.gamma_k(k, n) @ a.T, expected)
    return (lambda rg: _grid(rg, "N", "k")), run


def _detckn_expected(k: int, n: int) -> int:
    if n % (2 * k) == 0:
        return (-1) ** (k * (n // (2 * k)))
    if n % (2 * k) == k:
        m = n // (2 * k)
        return (-1) ** (k * m + k * (k - 1) // 2)
    return 0


@claim("detckn", "det gamma^(k)_N trichotomy", {"N": (0, 40), "k": (1, 4)}, {"N": (0, 16), "k": (1, 3)})
def _detckn():
    def run(p):
        return [check("detckn", p, det_bareiss(st.gamma_k(p["k"], p["N"])), _detckn_expected(p["k"], p["N"]))]
    return (lambda rg: _grid(rg, "N", "k")), run


@claim("alpha-beta", "Q sigma(eps)^k Q^T: eps=0 is gamma^(k); alpha/beta average to gamma^(k)",
       {"N": (1, 10), "k": (0, 20)}, {"N": (1, 5), "k": (0, 10)})
def _alpha_beta():
    def expand(rg):
        return [q for q in _grid(rg, "N", "k") if q["k"] <= 2 * q["N"]]

    def run(p):
        n, k = p["N"], p["k"]
        g = st.gamma_k(k, n)
        avg = (st.alpha_beta(k, n, 1) + st.alpha_beta(k, n, -1)) / 2
        return [check("alpha-beta", dict(p, form="eps=0"), st.alpha_beta(k, n, 0), g),
                check("alpha-beta", dict(p, form="average"), avg, g)]
    return expand, run


@claim("mult", "delta^(k) = delta delta^(k-1) - delta^(k-2) for alpha_N, beta_N, gamma",
       {"N": (1, 10), "k": (2, 8)}, {"N": (1, 6), "k": (2, 5)})
def _mult():
    def run(p):
        n, k = p["N"], p["k"]
        out = []
        for eps, label in ((1, "alpha"), (-1, "beta")):
            d1 = st.alpha_beta(1, n, eps)
            lhs = st.alpha_beta(k, n, eps)
            rhs = d1 @ st.alpha_beta(k - 1, n, eps) - st.alpha_beta(k - 2, n, eps)
            out.append(check("mult", dict(p, delta=label), lhs, rhs))
        # gamma is tridiagonal, so one extra row/column makes the product exact on N x N
        big = st.gamma(n + 1) @ st.gamma_k(k - 1, n + 1)
        rhs = big.leading(n) - st.gamma_k(k - 2, n)
        out.append(check("mult", dict(p, delta="gamma"), st.gamma_k(k, n), rhs))
        return out
    return (lambda rg: _grid(rg, "N", "k")), run


@claim("lkg", "L_k(delta) = delta^(k) for alpha_N, beta_N and gamma",
       {"N": (1, 10), "k": (0, 6)}, {"N": (1, 5), "k": (0, 4)})
def _lkg():
    def run(p):
        n, k = p["N"], p["k"]
        lk = lucas.lucas_poly(k)
        big = lucas.eval_at_matrix(lk, st.gamma(n + k)).leading(n)
        return [
            check("lkg", dict(p, delta="alpha"), lucas.eval_at_matrix(lk, st.alpha(n)), st.alpha_beta(k, n, 1)),
            check("lkg", dict(p, delta="beta"), lucas.eval_at_matrix(lk, st.beta(n)), st.alpha_beta(k, n, -1)),
            check("lkg", dict(p, delta="gamma"), big, st.gamma_k(k, n)),
        ]
    return (lambda rg: _grid(rg, "N", "k")), run


@claim("abg", "(p(alpha_N) + p(beta_N))/2 = p(gamma)|_N for deg p <= 2N",
       {"N": (1, 8), "i": (0, 4)}, {"N": (1, 5), "i": (0, 1)})
def _abg():
    def run(p):
        rng = _rng("abg", p)
        n = p["N"]
        poly = random_poly(rng, rng.randint(0, 2 * n))
        return [check("abg", dict(p, deg=poly.degree), pe.alpha_beta_average(poly, n), lucas.eval_at_gamma(poly, n))]
    return (lambda rg: _grid(rg, "N", "i")), run


@claim("B", "(beta_N + 2)^-1 closed form and det(beta_N + 2) = 2", {"N": (1, 30)}, {"N": (1, 12)})
def _b():
    def run(p):
        n = p["N"]
        inv = st.beta_plus2_inverse(n, check=False)
        return [
            check("B", dict(p, part="inverse"), (st.beta(n) + 2) @ inv, ExactMatrix.identity(n)),
            check("B", dict(p, part="det"), st.det_beta_plus2(n), 2),
            check("B", dict(p, part="b_N(-2)"), (-1) ** n * lucas.b_poly(n)(-2), 2),
        ]
    return (lambda rg: _grid(rg, "N")), run


@claim("gka", "entrywise structure of g_k(alpha_N), g_k(beta_N)", {"N": (1, 15)}, {"N": (1, 8)})
def _gka():
    def run(p):
        n = p["N"]
        a, b = st.alpha(n), st.beta(n)
        out = []
        for k in range(n):
            g = lucas.g_poly(k)
            out.append(check("gka", dict(p, k=k, at="alpha"), lucas.eval_at_matrix(g, a), st.structure_g_alpha(k, n)))
            out.append(check("gka", dict(p, k=k, at="beta"), lucas.eval_at_matrix(g, b), st.structure_g_beta(k, n)))
        return out
    return (lambda rg: _grid(rg, "N")), run


def _detgka_expected(k: int, n: int) -> int:
    m = 2 * k + 1
    if n % m == 0:
        return 1
    if n % m == k + 1:
        return (-1) ** ((k + 1) * k // 2)
    return 0


@claim("detgka", "det g_k(gamma)|_N trichotomy", {"N": (0, 40), "k": (0, 4)}, {"N": (0, 16), "k": (0, 3)})
def _detgka():
    def run(p):
        k, n = p["k"], p["N"]
        m = lucas.eval_at_gamma(lucas.g_poly(k), n)
        return [check("detgka", p, det_bareiss(m), _detgka_expected(k, n))]
    return (lambda rg: _grid(rg, "N", "k")), run


@claim("detbka", "structure of b_k(alpha_N), b_k(beta_N); det b_k(gamma)|_N trichotomy",
       {"N": (1, 40), "k": (1, 4)}, {"N": (1, 16), "k": (1, 3)})
def _detbka():
    def run(p):
        k, n = p["k"], p["N"]
        bk = lucas.b_poly(k)
        out = [check("detbka", dict(p, part="det"), det_bareiss(lucas.eval_at_gamma(bk, n)),
                     _detckn_expected(k, n))]
        if k < n and n <= 15:
            out.append(check("detbka", dict(p, part="alpha"), lucas.eval_at_matrix(bk, st.alpha(n)),
                             st.structure_b_alpha(k, n)))
            out.append(check("detbka", dict(p, part="beta"), lucas.eval_at_matrix(bk, st.beta(n)),
                             st.structure_b_beta(k, n)))
        return out
    return (lambda rg: _grid(rg, "N", "k")), run


# -- polynomials -----------------------------------------------------------------

@claim("charpoly", "g_n, a_n, b_n are the characteristic polynomials; b_n = L_n; L-bar sums",
       {"n": (1, 12)}, {"n": (1, 8)})
def _charpoly():
    def run(p):
        n = p["n"]
        g, a, b = lucas.char_polys(n)
        gbar = lucas.lucas_sum([(-1) ** (n - k) for k in range(n + 1)])
        abar = lucas.lucas_poly(n) + 2 * lucas.lucas_sum([(-1) ** (n - k) for k in range(n)])
        out = [
            check("charpoly", dict(p, part="b=L"), b, lucas.lucas_poly(n)),
            check("charpoly", dict(p, part="gngk"), g, gbar),
            check("charpoly", dict(p, part="a-display"), a, abar),
            check("charpoly", dict(p, part="L-closed-form"), lucas.lucas_poly(n), lucas.lucas_closed_form(n)),
        ]
        if n <= 8:
            out += [
                check("charpoly", dict(p, part="det(xI-gamma)"), lucas.charpoly_by_interpolation(st.gamma(n)), g),
                check("charpoly", dict(p, part="det(xI-alpha)"), lucas.charpoly_by_interpolation(st.alpha(n)), a),
                check("charpoly", dict(p, part="det(xI-beta)"), lucas.charpoly_by_interpolation(st.beta(n)), b),
            ]
        return out
    return (lambda rg: _grid(rg, "n")), run


@claim("inv", "x^n = sum_k C(n,k) Lbar_{n-2k}", {"n": (0, 20)}, {"n": (0, 10)})
def _inv():
    def run(p):
        from math import comb

        n = p["n"]
        expected = [0] * (n + 1)
        for k in range(n // 2 + 1):
            expected[n - 2 * k] = comb(n, k)
        mono = lucas.IntPolynomial.monomial(n)
        return [check("inv", dict(p, part="expand"), lucas.lucas_expand(mono), expected),
                check("inv", dict(p, part="sum"), lucas.lucas_sum(expected), mono)]
    return (lambda rg: _grid(rg, "n")), run


@claim("shift", "multiplying by (x+2) shifts A p(gamma) A^T by one row",
       {"k": (0, 6), "N": (12, 12)}, {"k": (0, 3), "N": (8, 8)})
def _shift():
    def run(p):
        k, n = p["k"], p["N"]
        size = n + 1
        a = st.matrix_A(size)
        lk = lucas.lucas_poly(k)
        base = a @ lucas.eval_at_gamma(lk, size) @ a.T
        shifted = a @ lucas.eval_at_gamma(lk * (lucas.X + 2), size) @ a.T
        for i in range(n):
            for j in range(n - 1 - i):
                if shifted[i, j] != base[i + 1, j]:
                    return [Record("shift", p, shifted[i, j], base[i + 1, j], FAIL, f"at ({i}, {j})")]
        # the h_r forms: C(2m+1, m-k) for g_k, C(2m+2k, m) for b_k (gamma+2)^(k-1)
        gk = a @ lucas.eval_at_gamma(lucas.g_poly(k), size) @ a.T
        out = [check("shift", dict(p, part="pascal"), True, True)]
        out.append(_window_check("shift", dict(p, part="g_k"), gk, lambda m: st.binom(2 * m + 1, m - k), n))
        if k >= 1:
            bk = a @ lucas.eval_at_gamma(lucas.b_poly(k) * (lucas.X + 2) ** (k - 1), size) @ a.T
            out.append(_window_check("shift", dict(p, part="b_k"), bk, lambda m: st.binom(2 * m + 2 * k, m), n))
        return out
    return (lambda rg: _grid(rg, "k", "N")), run


def _window_check(name, params, m: ExactMatrix, f, window: int) -> Record:
    for i in range(m.nrows):
        for j in range(m.ncols):
            if i + j <= window and m[i, j] != f(i + j):
                return Record(name, params, m[i, j], f(i + j), FAIL, f"at ({i}, {j})")
    return Record(name, params, "window", "window", PASS)


# -- determinant representations and the seven formulas ---------------------------

@claim("Gamma", "d_r(N) = det h_r(gamma)(gamma+2)^l|_N = det of the alpha/beta average",
       {"r": (1, 8), "N": (0, 16)}, {"r": (1, 6), "N": (0, 10)})
def _gamma():
    def expand(rg):
        out = []
        for q in _grid(rg, "r", "N"):
            k, l = pe.shift_params(q["r"])
            if q["N"] >= max(k + l, 1):
                out.append(q)
        return out

    def run(p):
        r, n = p["r"], p["N"]
        direct = pe.d_r_direct(r, n)
        return [check("Gamma", dict(p, route="gamma"), pe.d_r_via_gamma(r, n), direct),
                check("Gamma", dict(p, route="alpha-beta"), pe.d_r_via_alpha_beta(r, n), direct)]
    return expand, run


def _case_expand(cases):
    def expand(rg):
        return [{"case": c, "k": k, "n": n}
                for c in cases for k in _span(rg["k"]) for n in _span(rg["n"])]
    return expand


def _seven(corrected: bool):
    def run(p):
        c, k, n = p["case"], p["k"], p["n"]
        r, N = pe.case_r(c, k), pe.case_size(c, k, n)
        name = "seven" + ("-corrected" if corrected else "")
        params = {"case": c, "r": r, "k": k, "n": n, "N": N}
        return [check(name, params, pe.closed_form_value(c, k, n, corrected=corrected), pe.d_r_direct(r, N))]
    return _case_expand(pe.ALL_CASES), run


claim("seven", "the seven closed forms (as stated) against direct determinants",
      {"k": (1, 3), "n": (0, 3)}, {"k": (1, 2), "n": (0, 2)})(_seven(False))
claim("seven-corrected", "the seven closed forms with the k^(k-1) factor in cases 4 and 7",
      {"k": (1, 3), "n": (0, 3)}, {"k": (1, 2), "n": (0, 2)})(_seven(True))


def _lemma(name: str, cases, corrected: bool):
    def run(p):
        return [pe.verify_instance(p["case"], p["k"], p["n"], corrected=corrected)]
    return _case_expand(cases), run


claim("main1", "mu-induction lemma (mu_0 invertible), cases 1-4, stated witnesses",
      {"k": (1, 3), "n": (0, 3)}, {"k": (1, 2), "n": (0, 2)})(_lemma("main1", pe.MAIN1_CASES, False))
claim("main1-corrected", "cases 1-4 with the repaired w4 and closed forms",
      {"k": (1, 3), "n": (0, 3)}, {"k": (1, 2), "n": (0, 2)})(_lemma("main1", pe.MAIN1_CASES, True))
claim("main2", "mu-induction lemma (mu_0 singular), cases 5-7",
      {"k": (1, 3), "n": (0, 3)}, {"k": (1, 2), "n": (0, 2)})(_lemma("main2", pe.MAIN2_CASES, False))
claim("main2-corrected", "cases 5-7 with the repaired closed form for case 7",
      {"k": (1, 3), "n": (0, 3)}, {"k": (1, 2), "n": (0, 2)})(_lemma("main2", pe.MAIN2_CASES, True))


# -- favard ------------------------------------------------------------------------

FAMILIES = {f.name: f for f in favard.FavardData.tagged()}


def _family_expand(rg):
    return [{"family": name, "n": n} for name in FAMILIES for n in _span(rg["n"])]


@claim("Fav1", "a_n(0) reproduces the tagged sequences; known a_n(j) triangles",
       {"n": (20, 20)}, {"n": (12, 12)})
def _fav1():
    def run(p):
        f = FAMILIES[p["family"]]
        recs = favard.sequence_check(f, p["n"]).records
        if f.tag in (favard.Tag.SHIFT1, favard.Tag.AERATED_CENTRAL_BINOMIAL):
            recs += favard.triangle_closed_form_check(f, p["n"]).records
        return recs
    return _family_expand, run


@claim("Fav2", "sum_j a_n(j) p_j(x) = x^n", {"n": (10, 10)}, {"n": (6, 6)})
def _fav2():
    def run(p):
        return favard.moment_expansion_check(FAMILIES[p["family"]], p["n"]).records
    return _family_expand, run


@claim("ADA", "Hankel(a_{i+j}(0)) = A_n D_n A_n^T and det = prod of t's",
       {"n": (0, 12)}, {"n": (0, 6)})
def _ada():
    def run(p):
        f = FAMILIES[p["family"]]
        n = p["n"]
        rep = favard.factorization_check(f, n)
        rec = Record("ADA", p, "matrix", "matrix", PASS) if rep.passed else rep.counterexample
        spec = f.sequence_spec()
        return [rec, check("ADA", dict(p, part="det"), favard.hankel_det_product(f, n),
                           det_bareiss(st.hankel(spec, n)))]
    return _family_expand, run


# -- conjectures (reported, never failing verify) ----------------------------------

CONJECTURE_CLAIMS = ("conj1", "conj2", "conj3", "conj4", "conj5", "conj6")


def expand(name: str, overrides: dict | None = None, quick: bool = False) -> list[dict]:
    c = REGISTRY[name]
    ranges = dict(c.quick if quick else c.defaults)
    for axis, value in (overrides or {}).items():
        if axis in ranges and value is not None:
            ranges[axis] = value
    return c.expand(ranges)


def run_instance(name: str, params: dict) -> list[Record]:
    """Worker entry point: check one instance of a registered claim."""
    try:
        return REGISTRY[name].run(params)
    except Exception as exc:  # a crash in one instance is a reportable failure
        return [Record(name, params, None, None, FAIL, f"{type(exc).__name__}: {exc}")]


def claim_names() -> list[str]:
    return list(REGISTRY)


# `verify --all` runs the claims whose stated form is a theorem; the
# corrected variants are opt-in.
DEFAULT_CLAIMS = [n for n in REGISTRY if not n.endswith("-corrected")]
CORRECTED = {n.removesuffix("-corrected"): n for n in REGISTRY if n.endswith("-corrected")}


def conjecture_records(k_max: int, n_max: int, window: int) -> list[Record]:
    out = []
    for res in conjecture.check_dprime_conjectures(k_max, n_max):
        out += res.records
    out += conjecture.check_matrix_identity(k_max, window).records
    return out
