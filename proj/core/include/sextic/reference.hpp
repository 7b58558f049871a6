#pragma once

#include <array>

namespace sextic::reference {

// Golden values reproduced by the `reproduce` command and the acceptance
// suite. Energies and polynomial data at integer coupling are algebraically
// exact; the entropy and divergence tables are frozen published targets for
// the default-grid pipeline.

// Relative ground-state energy error versus prefactor degree.
struct LadderRef {
  int degree;
  double relative_error;
};

inline constexpr std::array<LadderRef, 6> ladder_lambda0{{
    {2, 2.6727e-2},
    {4, 9.7362e-4},
    {6, 2.3945e-5},
    {8, 4.4247e-7},
    {10, 6.5691e-9},
    {12, 8.1665e-11},
}};

inline constexpr std::array<LadderRef, 6> ladder_lambda1{{
    {2, 4.6563e-2},
    {4, 7.6744e-3},
    {6, 4.4991e-4},
    {8, 1.5361e-5},
    {10, 3.6657e-7},
    {12, 6.7071e-9},
}};

// Exact-state marginal entropies at the two algebraic couplings. The
// published S_p figures disagree with direct evaluation of the same states
// (three independent quadrature routes concur on the recomputed values, and
// the published convergence-error columns are consistent with them); both
// are kept so reports can show the discrepancy explicitly.
inline constexpr double sx_exact_lambda0 = 0.79109828152;
inline constexpr double sp_published_lambda0 = 1.37919393077;
inline constexpr double sp_recomputed_lambda0 = 1.3791773576;
inline constexpr double sx_exact_lambda1 = 0.993321580789;
inline constexpr double sp_published_lambda1 = 1.262393264036;
inline constexpr double sp_recomputed_lambda1 = 1.2624711173;

inline constexpr double critical_coupling_n0 = 0.7329;
inline constexpr double critical_coupling_n1 = 1.4209;

// Marginal Shannon entropies: rows (W, |W|, H) per (n, lambda) column.
struct EntropyColumn {
  double lambda;
  std::array<double, 3> sx;  // W, |W|, H
  std::array<double, 3> sp;
};

inline constexpr std::array<EntropyColumn, 4> entropy_table_n0{{
    {-0.75, {0.669446, 0.668119, 1.25773}, {1.48341, 1.50555, 1.66566}},
    {0.7329, {0.938019, 0.917103, 1.36759}, {1.28365, 1.4778, 1.54541}},
    {1.0, {0.993322, 0.966693, 1.4004}, {1.2624, 1.50888, 1.54159}},
    {4.0, {0.852065, 1.15412, 1.70738}, {1.69748, 2.00614, 2.05315}},
}};

inline constexpr std::array<EntropyColumn, 4> entropy_table_n1{{
    {-0.75, {0.799305, 0.907124, 1.44131}, {1.81374, 1.93029, 2.06706}},
    {0.75, {0.894196, 1.03248, 1.52491}, {1.67882, 1.87034, 1.98019}},
    {1.4209, {0.919881, 1.08487, 1.56973}, {1.63925, 1.87503, 1.96378}},
    {4.0, {0.828591, 1.1505, 1.70813}, {1.71753, 2.01796, 2.07535}},
}};

// CRJ divergences: pairs (|W|,W), (H,W), (H,|W|) per lambda, both spaces.
struct CrjColumn {
  double lambda;
  std::array<double, 3> position;
  std::array<double, 3> momentum;
};

inline constexpr std::array<CrjColumn, 6> crj_table_n0{{
    {-0.75, {9.72868e-7, 0.350672, 0.346475}, {0.00289026, 0.0476579, 0.0333811}},
    {0.7329, {0.000839818, 0.287128, 0.301167}, {0.0434621, 0.0658988, 0.0880575}},
    {1.0, {0.00214324, 0.28866, 0.308648}, {0.0589254, 0.0667597, 0.00589606}},
    {2.5, {0.0579798, 0.431972, 0.488934}, {0.0757902, 0.0491116, 0.00879494}},
    {4.0, {0.131541, 0.595489, 0.672753}, {0.0431918, 0.0369542, 0.00853151}},
    {5.0, {0.157213, 0.638869, 0.726098}, {0.0337971, 0.0325187, 0.00753547}},
}};

inline constexpr std::array<CrjColumn, 6> crj_table_n1{{
    {-0.75, {0.0390777, 0.394839, 0.432782}, {0.101457, 0.0459038, 0.122977}},
    {0.75, {0.0518047, 0.40362, 0.462339}, {0.0816687, 0.0542097, 0.078894}},
    {1.4209, {0.063286, 0.425713, 0.485834}, {0.0735118, 0.0541598, 0.0488316}},
    {2.5, {0.0910459, 0.492836, 0.558428}, {0.059317, 0.0471514, 0.0225922}},
    {4.0, {0.13334, 0.579705, 0.657533}, {0.0417442, 0.0372011, 0.00993492}},
    {5.0, {0.157484, 0.637086, 0.724503}, {0.0333961, 0.0319676, 0.00765889}},
}};

}  // namespace sextic::reference
