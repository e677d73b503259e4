"""Independent symbolic oracle for the values frozen in the C++ tests.

Everything is built from the index definitions with sympy, no shared code with the
library. Run: python3 tests/oracle/derive_values.py
"""
import itertools

import sympy as sp

X = sp.symbols("x1 x2 x3")
x1, x2, x3 = X
R = range(3)


def eps(i, j, k):
    return sp.LeviCivita(i, j, k)


def grad_vec(u):
    return sp.Matrix(3, 3, lambda i, j: sp.diff(u[i], X[j]))


def curl_rows(P):
    # (Curl P)_{ij} = eps_{jab} d_a P_{ib}
    return sp.Matrix(3, 3, lambda i, j: sum(eps(j, a, b) * sp.diff(P[i, b], X[a]) for a in R for b in R))


def div_rows(P):
    return sp.Matrix([sum(sp.diff(P[i, j], X[j]) for j in R) for i in R])


def sym(A):
    return (A + A.T) / 2


def skw(A):
    return (A - A.T) / 2


def dev(A):
    return A - A.trace() / 3 * sp.eye(3)


def axl(A):
    return sp.Matrix([-sp.Rational(1, 2) * sum(eps(i, j, k) * A[i, j] for i in R for j in R) for k in R])


def anti(v):
    return sp.Matrix(3, 3, lambda i, j: -sum(eps(i, j, k) * v[k] for k in R))


def frob2(A):
    return sum(A[i, j] ** 2 for i in R for j in R)


def k_hat(u):
    return curl_rows(sym(grad_vec(u)))


def k_tilde(u):
    a = axl(skw(grad_vec(u)))
    return grad_vec(a)


def stresses(u, mu, lam, L, a1, a2):
    G = grad_vec(u)
    sigma = 2 * mu * sym(G) + lam * G.trace() * sp.eye(3)
    kh, kt = k_hat(u), k_tilde(u)
    mh = mu * L**2 * (2 * a1 * dev(sym(kh)) + 2 * a2 * skw(kh))
    mt = mu * L**2 * (2 * a1 * dev(sym(kt)) + 2 * a2 * skw(kt))
    tau_h = sym(curl_rows(mh))
    tau_t = anti(div_rows(mt)) / 2
    return sigma, mh, mt, tau_h, tau_t


def box_integral(expr):
    return sp.integrate(sp.expand(expr), (x1, 0, 1), (x2, 0, 1), (x3, 0, 1))


def ritz(N, mu, lam, L, a1, a2, f):
    mu, lam, L, a1, a2 = (sp.S(v) for v in (mu, lam, L, a1, a2))
    fam = [sp.Symbol("t") * (1 - sp.Symbol("t")) * sp.Symbol("t") ** i for i in range(N)]
    t = sp.Symbol("t")
    basis = []
    for c in R:
        for i, j, k in itertools.product(range(N), repeat=3):
            phi = fam[i].subs(t, x1) * fam[j].subs(t, x2) * fam[k].subs(t, x3)
            v = [0, 0, 0]
            v[c] = phi
            basis.append(sp.Matrix(v))
    n = len(basis)
    cs = sp.symbols(f"c0:{n}")
    u = sum((cs[a] * basis[a] for a in range(n)), sp.zeros(3, 1))
    G = grad_vec(u)
    kh = k_hat(u)
    W = mu * frob2(sym(G)) + lam / 2 * G.trace() ** 2 + mu * L**2 * (a1 * frob2(dev(sym(kh))) + a2 * frob2(skw(kh)))
    A = sp.zeros(n, n)
    # A_ab = second derivative of the density integral / 2
    Wi = box_integral(W)
    for a in range(n):
        for b in range(n):
            A[a, b] = sp.diff(Wi, cs[a], cs[b]) / 2
    bvec = sp.Matrix([box_integral(sum(f[i] * basis[a][i] for i in R)) for a in range(n)])
    K = 2 * A
    c = K.LUsolve(bvec)
    return K, bvec, c, sp.nsimplify(-(bvec.T * c)[0] / 2)


def main():
    half = sp.Rational(1, 2)
    # 1. curvature of a fixed cubic field at a fixed point
    u = sp.Matrix([x2**2 * x3, x1 * x3**2, x1**2 * x2])
    pt = {x1: sp.Rational(3, 10), x2: sp.Rational(1, 2), x3: sp.Rational(7, 10)}
    print("k_hat(cubic) at (0.3,0.5,0.7):", k_hat(u).subs(pt).tolist())
    print("k_tilde^T - k_hat:", sp.simplify(k_tilde(u).T - k_hat(u)))

    # 2. quadratic shear
    ua = sp.Matrix([0, x1**2, 0])
    sigma, mh, mt, th, tt = stresses(ua, 1, 1, 1, 1, 0)
    print("u=(0,x1^2,0): k_hat =", k_hat(ua).tolist(), " m_hat =", mh.tolist(), " m_tilde =", mt.tolist())
    print("  Indeterminate(1,0) density:", sp.simplify(frob2(dev(sym(k_hat(ua))))))
    n = sp.Matrix([1, 0, 0])
    M = sp.Matrix(3, 3, lambda i, j: (mh.row(i).T.cross(n))[j])
    print("  M_hat =", M.tolist(), " (sym M).n =", (sym(M) * n).T.tolist())
    T = sp.eye(3) - n * n.T
    print("  axl double force, consistent anti:", (half * T * anti(mt * n) * n).T.tolist())

    # 3. stress for the cubic field with (mu,lam,L,a1,a2)=(1,1,1,1,1)
    sigma, mh, mt, th, tt = stresses(u, 1, 1, 1, 1, 1)
    print("cubic, all ones: m_hat at pt =", mh.subs(pt).tolist())
    print("  tau_hat at pt =", th.subs(pt).tolist())
    print("  div(tau_hat + tau_tilde) =", sp.simplify(div_rows(th + tt)).T.tolist())
    print("  div(tau_hat - tau_tilde) at pt =", div_rows(th - tt).subs(pt).T.tolist())

    # 4. Ritz energies, constant load (1,1,1), (mu,lam,L,a1,a2) = (1,1,1,1,0)
    f = [1, 1, 1]
    for N in (1, 2):
        K, b, c, E = ritz(N, 1, 1, 1, 1, 0, f)
        print(f"ritz N={N}: energy = {E} = {sp.N(E, 17)}  K00 = {K[0, 0]}  b0 = {b[0]}")


if __name__ == "__main__":
    main()
