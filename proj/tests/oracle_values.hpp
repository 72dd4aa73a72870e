#pragma once
// Generated by tests/oracle/oracle_values.py (mpmath, 40 digits). Do not edit.

#include <complex>

namespace oracle {

using cplx = std::complex<double>;

struct HurwitzCase { cplx s; double a; cplx value; cplx derivative; };
struct EnergyCase { cplx s; double delta; cplx value; cplx derivative; };
struct ZeroCase { double delta; cplx rho; };

inline constexpr double zeta2 = 1.6449340668482264365;
inline constexpr double zeta3 = 1.2020569031595942854;
inline constexpr double zeta_prime2 = -0.9375482543158437537;
inline constexpr double zeta_zero1 = 14.13472514173469379;

inline const HurwitzCase hurwitz_cases[] = {
    {{2.0, 0.0}, 1.0, {1.6449340668482264365, 0.0}, {-0.9375482543158437537, 0.0}},
    {{0.2999999999999999889, 5.0}, 1.0, {0.67564899811602329843, 0.25414478655467744161}, {0.13510601848291784763, -0.11820776851790246557}},
    {{-1.0, 4.0}, 0.25, {0.50207657021471135278, -0.43029805746304781856}, {0.23274561785423599472, -0.36399659774942868254}},
    {{-3.8999999999999999112, 3.0}, 0.69999999999999995559, {-0.058255443177376807527, -0.089461443263488990219}, {-0.097239057744040162587, 0.043986096379165802714}},
    {{2.5, -10.0}, 0.2999999999999999889, {17.057991498118801167, 10.54693733041709051}, {21.248653953359644267, 12.13543090708835807}},
    {{-7.2000000000000001776, 12.0}, 0.4000000000000000222, {26.981562606099595983, -232.8369367802088597}, {-155.14849543159663314, 174.88025478697620365}},
    {{-9.5, -3.0}, 0.9000000000000000222, {-0.33660190576913002566, -0.0084610242483245723685}, {0.18197965708658808075, -0.42641357933031929202}},
    {{0.5, 29.0}, 0.14999999999999999445, {-2.2283648463687477126, -2.1572788639124127314}, {2.3816918327605008617, -4.5354212287232711618}},
    {{6.0, 1.0}, 0.050000000000000002776, {-6.3320397403515656351e+7, 9.3019984974191149525e+6}, {-1.8969096038517126809e+8, 2.7866297256990139232e+7}},
    {{-2.5, 0.0}, 0.5, {-0.0070113342544251247152, 0.0}, {0.0062016988016927904559, 0.0}},
};

inline const EnergyCase energy_cases[] = {
    {{0.2999999999999999889, 2.0}, 0.69999999999999995559, {0.33336699448322422802, -0.23519157785512978127}, {0.27685726677828385168, -0.097082456852633113857}},
    {{-6.0, 5.0}, 0.4000000000000000222, {32.53686064132173434, 24.681499171550746048}, {-8.5947213653046683992, -53.501871841465712906}},
    {{2.0, 0.0}, 0.2999999999999999889, {3.2168094229234355856, 0.0}, {0.78163457788117981102, 0.0}},
    {{3.0, 0.0}, 0.69999999999999995559, {1.4051975246307993222, 0.0}, {-0.074699649227093321283, 0.0}},
    {{-0.5, 3.0}, 0.25, {-0.64023647529820623272, -0.616725431959487315}, {-0.37746620703819527869, 0.32310195035868638738}},
    {{0.5, 20.0}, 0.5999999999999999778, {0.2571588868579909348, -0.69690530827253564028}, {0.55301893528011392662, 0.40692806132251183911}},
    {{-12.0, 7.0}, 0.8499999999999999778, {-13574.946548510396037, -20431.414639267486694}, {-1176.0627555080579334, 45451.620289115000026}},
    {{1.5, -4.0}, 0.10000000000000000555, {5.0832965376626253216, -3.0704703421858155017}, {9.6807399725588426519, -5.7529544765680167705}},
};

inline const ZeroCase zero_cases[] = {
    {0.2, {0.63508426164115804986, 1.0788541850188631373}},
    {0.97999999999999999958, {-10.954020424460580304, 4.5323382291063926229}},
    {0.98999999999999999979, {-12.969836866541234086, 4.5323577406049294494}},
    {0.9949999999999999999, {-14.977393196797882318, 4.5323598768933746131}},
};

}  // namespace oracle
