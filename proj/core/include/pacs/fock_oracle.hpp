#pragma once

// Brute-force verification layer. States are built in a truncated Fock space,
// overlaps come from amplitude sums only, and every correlation measure is
// recomputed from density matrices: von Neumann entropies from Jacobi
// spectra, concurrence from the spin-flip spectrum, and discord by explicit
// minimization over projective qubit measurements. Nothing here evaluates a
// Laguerre polynomial or a closed-form correlation.

#include <array>
#include <complex>
#include <optional>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "pacs/linalg.hpp"
#include "pacs/states.hpp"

namespace pacs::oracle {

using Complex = std::complex<double>;

class TruncationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Amplitudes <n|psi> for n = 0..nmax.
struct FockVector {
  std::vector<Complex> amplitudes;

  int nmax() const noexcept { return static_cast<int>(amplitudes.size()) - 1; }
  double norm2() const;
  /// <this|other>
  Complex inner(const FockVector& other) const;
};

/// max(m+4, ceil(alpha2 + 10 sqrt(alpha2) + m + 20)).
int truncation_nmax(const ModelParams& p);

/// Glauber coherent state with real amplitude alpha. Throws TruncationError
/// if |<nmax|alpha>|^2 exceeds 1e-24.
FockVector coherent_vector(double alpha, int nmax);

struct PhotonAdded {
  FockVector state;  // normalized
  double raw_norm2;  // squared norm of (a^+)^m |v> before normalization
};

/// Applies the creation operator m times, then normalizes. Throws
/// TruncationError when the top m amplitudes of v carry weight above 1e-24.
PhotonAdded add_photons(const FockVector& v, int m);

/// Density matrix on a labeled tensor product of subsystems.
class DensityMatrix {
 public:
  DensityMatrix(std::vector<std::size_t> dims, linalg::Matrix data);

  static DensityMatrix projector(std::vector<std::size_t> dims, const std::vector<Complex>& psi);

  const std::vector<std::size_t>& dims() const noexcept { return dims_; }
  std::size_t dimension() const noexcept { return data_.rows(); }
  const linalg::Matrix& matrix() const noexcept { return data_; }
  Complex operator()(std::size_t r, std::size_t c) const { return data_(r, c); }

  double trace() const { return data_.trace().real(); }
  double purity() const;
  double hermiticity_error() const { return linalg::hermiticity_error(data_); }
  double min_eigenvalue() const;
  /// Unit trace, Hermitian and PSD within tol (min eigenvalue >= -10 tol).
  bool is_valid(double tol = 1e-10) const;

 private:
  std::vector<std::size_t> dims_;
  linalg::Matrix data_;
};

/// Partial trace keeping the listed subsystems (in the given order's
/// ascending sort). An empty list traces out everything.
DensityMatrix partial_trace(const DensityMatrix& rho, std::vector<std::size_t> keep);

/// -sum lambda log2 lambda over the Jacobi spectrum.
double von_neumann_entropy(const DensityMatrix& rho);

/// Wootters concurrence of a two-qubit density matrix.
double wootters_concurrence(const DensityMatrix& rho);

/// EoF of a two-qubit state from its concurrence.
double entanglement_of_formation(const DensityMatrix& rho);

enum class Side { first, second };

/// Bloch angles of the projective measurement {|v><v|, 1 - |v><v|},
/// |v> = cos(theta/2)|0> + e^{i phi} sin(theta/2)|1>.
struct MeasurementPoint {
  double theta;
  double phi;
};

/// Post-measurement conditional entropy sum_i p_i S(rho_other|i) for a
/// projective measurement on `measured`.
double conditional_entropy(const DensityMatrix& rho, Side measured, MeasurementPoint at);

struct DiscordResult {
  double discord;
  double min_conditional_entropy;
  MeasurementPoint optimum;
};

/// Discord with measurement on `measured`: S(measured) - S(joint) + min
/// conditional entropy, minimized on a 64x64 (theta, phi) grid and refined by
/// Nelder-Mead to 1e-10 in angle.
DiscordResult discord_search(const DensityMatrix& rho, Side measured);
double discord_numeric(const DensityMatrix& rho, Side measured);

/// Per-mode cat-qubit encoding obtained from the numeric Fock vectors.
struct EncodedMode {
  FockVector plus;   // |alpha, m>
  FockVector minus;  // |-alpha, m>
  FockVector e0;     // normalized (plus + minus)
  FockVector e1;     // (plus - minus) orthogonalized against e0, normalized
  std::array<Complex, 2> coords_plus;
  std::array<Complex, 2> coords_minus;
};

EncodedMode encode_mode(double alpha, int m, int nmax);

struct TripartiteState {
  ModelParams params;
  EncodedMode mode1;
  EncodedMode mode23;  // modes 2 and 3 share one encoding
  double normalization;             // numeric C_k(alpha, m)
  std::array<Complex, 8> amplitudes;  // |ijk>, i = mode 1 (most significant)

  DensityMatrix density() const;
  /// <n1, n2, n3 | GHZ_k(alpha, m)> in the Fock basis.
  Complex fock_amplitude(int n1, int n2, int n3) const;
};

TripartiteState build_tripartite_state(const ModelParams& p, int nmax);
/// Projector of the photon-added quasi-GHZ state on the 2x2x2 encoded space.
DensityMatrix build_tripartite(const ModelParams& p, int nmax);
/// Projector of the photon-added quasi-Bell state on the 2x2 encoded space.
DensityMatrix build_bipartite(const ModelParams& p, int nmax);

struct VerifyBounds {
  double entropy = 1e-8;  // entropies, concurrences, EoFs
  double discord = 1e-3;  // measurement-minimized quantities
};

struct FieldDeviation {
  std::string_view field;
  double closed_form;
  double oracle;
  double deviation;  // closed_form - oracle
  bool discord_class;
  double bound;

  bool within_bound() const { return std::abs(deviation) <= bound; }
};

struct VerificationRecord {
  ModelParams params;
  int nmax;
  std::vector<FieldDeviation> fields;

  double max_entropy_deviation() const;
  double max_discord_deviation() const;
  /// Field whose |deviation| / bound is largest.
  const FieldDeviation& worst() const;
  bool passed() const;
};

/// Compares every closed-form CorrelationReport field with the oracle.
VerificationRecord verify(const ModelParams& p, std::optional<int> nmax = std::nullopt,
                          VerifyBounds bounds = {});

}  // namespace pacs::oracle
