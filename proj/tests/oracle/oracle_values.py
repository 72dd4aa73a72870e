"""Regenerates tests/oracle_values.hpp from mpmath at 40 digits.

    python3 tests/oracle/oracle_values.py > tests/oracle_values.hpp
"""
import mpmath as mp

mp.mp.dps = 40


def energy(s, delta):
    z = 1 / (1 + mp.mpf(delta))
    return mp.power(2, -s) * mp.zeta(s) + mp.power(2, -s - 1) * (mp.zeta(s, z) + mp.zeta(s, 1 - z))


def energy_ds(s, delta):
    return mp.diff(lambda t: energy(t, delta), s)


def c(z):
    z = mp.mpc(z)
    return "{%s, %s}" % (mp.nstr(z.real, 20, min_fixed=-5, max_fixed=5),
                         mp.nstr(z.imag, 20, min_fixed=-5, max_fixed=5))


def r(x):
    return mp.nstr(mp.mpf(x), 20, min_fixed=-5, max_fixed=5)


out = []
emit = out.append
emit("#pragma once")
emit("// Generated by tests/oracle/oracle_values.py (mpmath, 40 digits). Do not edit.")
emit("")
emit("#include <complex>")
emit("")
emit("namespace oracle {")
emit("")
emit("using cplx = std::complex<double>;")
emit("")
emit("struct HurwitzCase { cplx s; double a; cplx value; cplx derivative; };")
emit("struct EnergyCase { cplx s; double delta; cplx value; cplx derivative; };")
emit("struct ZeroCase { double delta; cplx rho; };")
emit("")
emit("inline constexpr double zeta2 = %s;" % r(mp.zeta(2)))
emit("inline constexpr double zeta3 = %s;" % r(mp.zeta(3)))
emit("inline constexpr double zeta_prime2 = %s;" % r(mp.zeta(2, derivative=1)))
emit("inline constexpr double zeta_zero1 = %s;" % r(mp.zetazero(1).imag))
emit("")

hurwitz_points = [
    (mp.mpc(2, 0), 1), (mp.mpc(0.3, 5), 1), (mp.mpc(-1, 4), 0.25), (mp.mpc(-3.9, 3), 0.7),
    (mp.mpc(2.5, -10), 0.3), (mp.mpc(-7.2, 12), 0.4), (mp.mpc(-9.5, -3), 0.9),
    (mp.mpc(0.5, 29), 0.15), (mp.mpc(6, 1), 0.05), (mp.mpc(-2.5, 0), 0.5),
]
emit("inline const HurwitzCase hurwitz_cases[] = {")
for s, a in hurwitz_points:
    a = mp.mpf(a)
    emit("    {%s, %s, %s, %s}," % (c(s), r(a), c(mp.zeta(s, a)), c(mp.zeta(s, a, 1))))
emit("};")
emit("")

energy_points = [
    (mp.mpc(0.3, 2), 0.7), (mp.mpc(-6, 5), 0.4), (mp.mpc(2, 0), 0.3), (mp.mpc(3, 0), 0.7),
    (mp.mpc(-0.5, 3), 0.25), (mp.mpc(0.5, 20), 0.6), (mp.mpc(-12, 7), 0.85),
    (mp.mpc(1.5, -4), 0.1),
]
emit("inline const EnergyCase energy_cases[] = {")
for s, d in energy_points:
    d = mp.mpf(d)
    emit("    {%s, %s, %s, %s}," % (c(s), r(d), c(energy(s, d)), c(energy_ds(s, d))))
emit("};")
emit("")

zeros = []
zeros.append((mp.mpf(1) / 5, mp.findroot(lambda s: energy(s, mp.mpf(1) / 5), mp.mpc(0.635, 1.0789))))
for eps, guess in [(0.02, mp.mpc(-10.954, 4.5323)), (0.01, mp.mpc(-12.97, 4.5324)),
                   (0.005, mp.mpc(-14.977, 4.5324))]:
    d = 1 - mp.mpf(eps)
    zeros.append((d, mp.findroot(lambda s: energy(s, d), guess)))
emit("inline const ZeroCase zero_cases[] = {")
for d, z in zeros:
    emit("    {%s, %s}," % (r(d), c(z)))
emit("};")
emit("")
emit("}  // namespace oracle")
print("\n".join(out))
