"""Exact stiffness entries for the single-material kernel on a 4-element mesh.

Layout: Gamma1 = [-1, -0.5], Omega1 = (-0.5, 0), Omega2 = (0, 0.5), Gamma2 = [0.5, 1],
h = delta = 1/2, kappa = 1, gamma = 3/2 kappa / delta^3 on |x - y| <= delta.
DOFs (double node at 0): 0:-1, 1:-0.5, 2:0(left), 3:0(right), 4:0.5, 5:1.

Integrates A_ij = int int gamma (phi_j(x)-phi_j(y)) (phi_i(x)-phi_i(y)) dy dx
symbolically, splitting the y range at every node and at x +- delta.
"""
import sympy as sp

x, y = sp.symbols("x y", real=True)
half = sp.Rational(1, 2)
delta = half
c = sp.Rational(3, 2) / delta**3
nodes = [-1, -half, 0, half, 1]
# element k spans nodes[k]..nodes[k+1]; local dofs per element
elem_dofs = [(0, 1), (1, 2), (3, 4), (4, 5)]


def hat(dof, t, k):
    """phi_dof restricted to element k, as an expression in t."""
    x0, x1 = nodes[k], nodes[k + 1]
    l, r = elem_dofs[k]
    if dof == l:
        return (x1 - t) / (x1 - x0)
    if dof == r:
        return (t - x0) / (x1 - x0)
    return sp.Integer(0)


def entry(i, j):
    total = sp.Integer(0)
    for kx in range(4):
        ax, bx = nodes[kx], nodes[kx + 1]
        # Inside element kx, x - delta and x + delta fall strictly inside
        # neighbouring elements (delta = h), so the split points are fixed.
        for ky in range(4):
            ay, by = nodes[ky], nodes[ky + 1]
            if ky == kx - 1:
                lo_e, hi_e = x - delta, by
            elif ky == kx:
                lo_e, hi_e = ay, by
            elif ky == kx + 1:
                lo_e, hi_e = ay, x + delta
            else:
                continue
            integrand = c * (hat(j, x, kx) - hat(j, y, ky)) * (hat(i, x, kx) - hat(i, y, ky))
            inner = sp.integrate(integrand, (y, lo_e, hi_e))
            total += sp.integrate(inner, (x, ax, bx))
    return sp.nsimplify(sp.simplify(total))


if __name__ == "__main__":
    for (i, j) in [(1, 1), (1, 2), (2, 3), (0, 2), (2, 2), (1, 4)]:
        v = entry(i, j)
        print(i, j, v, float(v))
