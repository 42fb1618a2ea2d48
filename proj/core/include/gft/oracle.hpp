#pragma once

// Brute-force maximization of coefficient functionals over the Caratheodory
// class, used to check bounds empirically.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gft/bounds.hpp"
#include "gft/classes.hpp"
#include "gft/extremal.hpp"

namespace gft {

enum class FunctionalKind {
  absA2,
  absA3,
  absA4,
  absA5,
  fs_inverse,
  hankel2_inverse,
  abs_an_direct,
  fs_direct,
  hankel2_direct,
  a2a3_minus_a4,
  h3_direct,
};

struct Functional {
  FunctionalKind kind = FunctionalKind::absA2;
  Complex mu{};  // fs_inverse, fs_direct
  int n = 0;     // abs_an_direct

  static Functional abs_A(int n);
  static Functional fs_inverse(Complex mu);
  static Functional hankel2_inverse();
  static Functional abs_an_direct(int n);
  static Functional fs_direct(Complex mu);
  static Functional hankel2_direct();
  static Functional a2a3_minus_a4();
  static Functional h3_direct();

  // "absA4", "fs_inverse(0.5)", "abs_an_direct(6)", "h3_direct", ...
  static Functional parse(std::string_view text);
  std::string id() const;

  // Depends on c4 (so the Libera-Zlotkiewicz lift cannot reach it).
  bool needs_c4() const;
  // Needs a_n with n >= 6, evaluated through the series route.
  bool needs_series() const;
};

// Value from the closed-form coefficient maps; throws DomainError when c4 is
// required but absent, or when the functional needs the series route.
double evaluate(const Functional& f, const PhiCoefficients& b, const CaratheodoryCoeffs& c);

// General evaluation from a Herglotz measure (series route when needed).
double evaluate(const Functional& f, const MindaClass& cls, const HerglotzAtoms& atoms);

struct LzParams {
  double c1 = 0.0;
  Complex gamma{};
  Complex z{1.0, 0.0};
};

struct SearchBudget {
  int starts = 64;
  int iterations = 2000;
  std::uint64_t seed = 0;
  int threads = 0;  // 0: hardware concurrency
};

struct OracleResult {
  double max = 0.0;
  std::optional<HerglotzAtoms> atoms;  // canonicalized so that c1 is real >= 0
  std::optional<LzParams> lz;
  CaratheodoryCoeffs c;
  int start_index = -1;
  std::string start_kind;  // "herglotz1".."herglotz4" or "lz"
  long evaluations = 0;
};

OracleResult maximize(const Functional& f, const MindaClass& cls, const SearchBudget& budget);

// Known theorem or conjecture bound for (f, class), if any.
std::optional<BoundReport> bound_for(const Functional& f, const MindaClass& cls);

struct NamedWitness {
  std::string extremal_id;  // f0, f1, f2, f3 or an m-fold pattern
  HerglotzAtoms atoms;
};

// Exact sharpness witness for bounds flagged sharp: p(z) = (1 + z^m)/(1 - z^m),
// i.e. m equally spaced atoms, with m fixed by the named extremal function.
std::optional<NamedWitness> sharp_witness(const Functional& f, const MindaClass& cls);

// Herglotz measure of (1 + z^m)/(1 - z^m).
HerglotzAtoms m_fold_atoms(int m);

enum class Verdict { sound, sharp_confirmed, violation };

const char* to_string(Verdict v);

struct VerifyReport {
  Verdict verdict = Verdict::sound;
  double empirical = 0.0;
  BoundReport bound;
  OracleResult search;
  std::optional<double> witness_value;
  std::optional<std::string> witness_id;
  bool witness_attains = false;  // |witness - bound| <= 1e-9
};

inline constexpr double kSoundTol = 1e-9;
inline constexpr double kSharpTol = 1e-3;

VerifyReport verify_bound(const Functional& f, const MindaClass& cls, const BoundReport& bound,
                          const SearchBudget& budget, double sharp_tol = kSharpTol);

struct MatrixEntry {
  Functional functional;
  std::string class_id;
};

// Bounds checked by `verify --target all` and the acceptance suite.
std::vector<MatrixEntry> verification_matrix();

// Conjectured S*_R bounds, probed separately.
std::vector<MatrixEntry> conjecture_matrix();

}  // namespace gft
