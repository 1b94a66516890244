#pragma once

// Schrodinger invariant I_S(x) = rho^2 I_h(z) + {z, x}/2 = k^2 - V(x) built from
// the Heun invariant and a transform family, the closed forms printed for the
// special families, and the wavefunction psi = phi(z) Hl(z).

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "heunpot/heun_core.hpp"
#include "heunpot/invariants.hpp"
#include "heunpot/transforms.hpp"

namespace heunpot {

/// Points with z within this distance of 0, 1 or a, or with |z'| below it,
/// are excluded from profiles.
inline constexpr double kProfileCollar = 1e-3;

bool in_singularity_collar(const HeunParams& p, const ZPoint& pt);

/// I_S as a function of z for a given ansatz.
cplx schrodinger_invariant_at_z(const HeunParams& p, const QuadraticRho& r, cplx z);

cplx schrodinger_invariant_direct(const HeunParams& p, const TransformFamily& fam, double x);

// --- Printed closed forms ---------------------------------------------------
//
// The printed formulas use one symbol for both the Heun singular point and
// the transform rate. Closed forms are evaluated with the family rate in the
// arguments and the overall prefactor, and the Heun a everywhere else.
// Coefficient tables are evaluated literally, every occurrence of that symbol
// read as the Heun a, so they can only hold when the rate equals a.

enum class PrintedDisplay { H1Plus, H1Minus, H2a, H2b, H3a, H3b, H4, H5Plus, H5Minus };

std::string to_string(PrintedDisplay d);
std::optional<PrintedDisplay> display_for(const TransformFamily& fam);

cplx printed_display_invariant(PrintedDisplay d, const HeunParams& p, const TransformFamily& fam, double x);

enum class ExpandedCase { CaseIPlus, CaseIIa, CaseIIIa, CaseIV, CaseVMinus };

std::string to_string(ExpandedCase c);
std::optional<ExpandedCase> expanded_case_for(const TransformFamily& fam);

struct NamedCoeff {
  std::string name;
  cplx value;
};

/// Coefficients of one partial-fraction table together with everything the
/// basis functions depend on.
struct ExpandedCoeffs {
  ExpandedCase which;
  cplx heun_a;
  TransformFamily family;
  std::vector<NamedCoeff> coeffs;

  cplx& at(std::string_view name);
};

/// The table as printed.
ExpandedCoeffs printed_expanded_coeffs(ExpandedCase c, const HeunParams& p, const TransformFamily& fam);

/// Basis functions of the table, in the order of its coefficients.
std::vector<cplx> expansion_basis(ExpandedCase c, cplx heun_a, const TransformFamily& fam, double x);

cplx expanded_invariant(const ExpandedCoeffs& c, double x);

// --- Cross-checking printed claims against the direct assembly ---------------

enum class Verdict { Confirmed, Erratum };

std::string to_string(Verdict v);

struct ClaimVerdict {
  std::string claim;   // e.g. "display H1+" or "table i+"
  std::string family;  // family_name of the transform
  Verdict verdict = Verdict::Confirmed;
  double max_rel_error = 0.0;
  std::vector<double> xs;
  std::vector<double> per_point;  // |direct - printed| / max(|direct|, rms(direct))
  std::vector<NamedCoeff> printed;
  std::vector<NamedCoeff> refit;  // least-squares coefficients, tables only
  double refit_max_rel_error = 0.0;
};

inline constexpr double kConfirmTolerance = 1e-8;

ClaimVerdict cross_check_table(const HeunParams& p, const ExpandedCoeffs& c, std::span<const double> grid,
                               double tol = kConfirmTolerance);
ClaimVerdict cross_check_display(const HeunParams& p, PrintedDisplay d, const TransformFamily& fam,
                                 std::span<const double> grid, double tol = kConfirmTolerance);

/// Every printed claim that applies to this family, checked on the grid.
/// Collar points are skipped.
std::vector<ClaimVerdict> cross_check_expansion(const HeunParams& p, const TransformFamily& fam,
                                                std::span<const double> grid, double tol = kConfirmTolerance);

// --- Energy split, wavefunction, profiles ------------------------------------

/// x-independent additive term of the family's partial-fraction expansion:
/// s^2 (4A - 1) for the exponential family, zero otherwise.
cplx energy_constant(const HeunParams& p, const TransformFamily& fam);

struct EnergySplit {
  cplx k_squared;
  std::vector<cplx> v_values;
};

EnergySplit split_energy_potential(std::span<const cplx> is_values, const HeunParams& p, const TransformFamily& fam);

cplx wavefunction(const HeunParams& p, const TransformFamily& fam, double x);

enum class ConstructionPath { Direct, Expanded };

std::string to_string(ConstructionPath path);

struct GridSpec {
  double min = 0.0;
  double max = 1.0;
  std::size_t count = 201;
};

GridSpec default_window(const TransformFamily& fam);
std::vector<double> make_grid(const GridSpec& spec);

struct PotentialProfile {
  TransformFamily family;
  HeunParams heun;
  ConstructionPath construction_path = ConstructionPath::Direct;
  std::vector<double> xs;
  std::vector<cplx> zs;
  std::vector<cplx> is_values;
  cplx k_squared;
  std::vector<cplx> v_values;
  std::vector<std::optional<cplx>> psi_values;  // empty where the series does not reach
  std::vector<double> excluded;                 // grid points inside collars
};

PotentialProfile build_profile(const HeunParams& p, const TransformFamily& fam, const GridSpec& grid,
                               ConstructionPath path = ConstructionPath::Direct);

}  // namespace heunpot
