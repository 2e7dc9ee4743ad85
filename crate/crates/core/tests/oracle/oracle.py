"""Independent high-precision oracle for the frozen expected values used in
the core crate's tests.

Everything here goes through complex arithmetic on x = x1 + i*p2 and the
analytic mass M(x); none of the split real formulas used by the Rust code
are reused. Run with `python3 oracle.py` and paste the output into
`tests/frozen.rs`.
"""
import mpmath as mp

mp.mp.dps = 40


def mass(c, d, e1, e2, x1, p2):
    x = mp.mpc(x1, p2)
    slope = mp.mpc(c, d)
    return slope * x + mp.mpc(e1, e2), slope


def beta3_printed(M, a, v0r, hbar=1):
    m2 = abs(M) ** 2
    den = (a * a * mp.conj(M)).real
    return mp.sqrt(2 * m2 * v0r / (hbar**2 * den))


def w_of(M, dM, a, b3):
    # beta1 + i*alpha1
    return a * b3 - 1j * a / 2 - 1j * dM / (2 * M)


def energy(M, dM, w, hbar=1):
    return hbar**2 / 2 * (w * w / M + 1j * dM * w / M**2)


def show(name, v):
    if isinstance(v, mp.mpc):
        print(f"{name}_re = {mp.nstr(v.real, 20)}")
        print(f"{name}_im = {mp.nstr(v.imag, 20)}")
    else:
        print(f"{name} = {mp.nstr(v, 20)}")


# potential
a = mp.mpc(1, 0.3)
x = mp.mpc(0.4, -0.1)
V0 = mp.mpc(0.5, 0.1)
show("potential", V0 * (mp.exp(-2 * a * x) - 2 * mp.exp(-a * x)))

# general linear profile at (0.3, -0.2)
M, dM = mass(0.1, 0.05, 1, 0.2, 0.3, -0.2)
b3 = beta3_printed(M, a, 0.5)
show("gl_beta3", b3)
w = w_of(M, dM, a, b3)
show("gl_beta1", w.real)
show("gl_alpha1", w.imag)
show("gl_energy", energy(M, dM, w))
x = mp.mpc(0.3, -0.2)
g = w * x + b3 * mp.exp(-a * x)
show("gl_phase", g)
show("gl_psi", mp.exp(1j * g))

# constraint ratio m = (1, 0.2), a = (1, 0.3)
Mc = mp.mpc(1, 0.2)
z = a * a * mp.conj(Mc)
show("constraint_ratio", z.imag / z.real)

# density
al, be = mp.mpf(0.7), mp.mpf(1.3)
show("density", al * be * mp.exp(-2 * (al * 0.4 + be * 0.2)))

# case IA at (0.3, -0.2): reduction formulas of the alpha/beta slopes
Mi, dMi = mass(0, 0.05, 1, 0.2, 0.3, -0.2)
b3i = beta3_printed(Mi, a, 0.5)
mr, mi, mp_i = Mi.real, Mi.imag, mp.mpf(0.05)
m2 = mr**2 + mi**2
show("ia_beta3", b3i)
show("ia_alpha1", a.imag * b3i - a.real / 2 - mi * mp_i / (2 * m2))
show("ia_beta1", a.real * b3i + a.imag / 2 + mr * mp_i / (2 * m2))
wi = w_of(Mi, dMi, a, b3i)
show("ia_energy", energy(Mi, dMi, wi))

# case IIA at (0.3, -0.2)
Mii, dMii = mass(0.1, 0, 1, 0.2, 0.3, -0.2)
b3ii = beta3_printed(Mii, a, 0.5)
show("iia_beta3", b3ii)
wii = w_of(Mii, dMii, a, b3ii)
show("iia_energy", energy(Mii, dMii, wii))


def ei_poly(M, dM, a):
    # E_i is quadratic in beta3; read the coefficients off exactly
    f = lambda t: energy(M, dM, w_of(M, dM, a, t)).imag
    q0 = f(0)
    q1 = (f(1) - f(-1)) / 2
    q2 = (f(1) + f(-1)) / 2 - q0
    return q2, q1, q0


def roots(q2, q1, q0):
    disc = mp.sqrt(q1 * q1 - 4 * q2 * q0)
    r = sorted([(-q1 - disc) / (2 * q2), (-q1 + disc) / (2 * q2)])
    return r


q = ei_poly(M, dM, a)
show("gl_q2", q[0])
show("gl_q1", q[1])
show("gl_q0", q[2])

Mr, dMr = mass(0, 0.05, 1, 0.2, 0.2, 0.1)
q = ei_poly(Mr, dMr, a)
lo, hi = roots(*q)
show("ia_root_lo", lo)
show("ia_root_hi", hi)
for name, r in (("lo", lo), ("hi", hi)):
    show(f"ia_er_at_root_{name}", energy(Mr, dMr, w_of(Mr, dMr, a, r)).real)
