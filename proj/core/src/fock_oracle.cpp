#include "pacs/fock_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "pacs/correlations.hpp"
#include "pacs/special.hpp"

namespace pacs::oracle {

namespace {

constexpr double kTailBound = 1e-24;
constexpr double kGramFloor = 1e-20;
constexpr int kGridTheta = 64;
constexpr int kGridPhi = 64;
constexpr double kAngleTol = 1e-10;

FockVector scaled(const FockVector& v, Complex s) {
  FockVector out = v;
  for (auto& a : out.amplitudes) a *= s;
  return out;
}

FockVector combine(const FockVector& a, Complex sa, const FockVector& b, Complex sb) {
  FockVector out;
  out.amplitudes.resize(a.amplitudes.size());
  for (std::size_t n = 0; n < out.amplitudes.size(); ++n) {
    out.amplitudes[n] = sa * a.amplitudes[n] + sb * b.amplitudes[n];
  }
  return out;
}

double entropy_of_spectrum(const std::vector<double>& spectrum) {
  double s = 0.0;
  for (double lambda : spectrum) {
    if (lambda > 0.0) s -= lambda * std::log2(lambda);
  }
  return s;
}

// Entropy of a 2x2 Hermitian block [[a, z], [conj z, d]] scaled by 1/(a+d).
double qubit_entropy(double a, double d, Complex z) {
  const double tr = a + d;
  const double radius = std::hypot(0.5 * (a - d), std::abs(z));
  const double upper = (0.5 * tr + radius) / tr;
  return binary_entropy(std::min(upper, 1.0));
}

std::array<Complex, 2> measurement_vector(MeasurementPoint at) {
  return {std::cos(0.5 * at.theta), std::polar(1.0, at.phi) * std::sin(0.5 * at.theta)};
}

// Minimizes f over R^2 starting from x0 with per-axis step sizes.
template <typename F>
std::pair<std::array<double, 2>, double> nelder_mead(F&& f, std::array<double, 2> x0,
                                                     std::array<double, 2> step, double tol,
                                                     int max_iter = 5000) {
  using Point = std::array<double, 2>;
  std::array<Point, 3> simplex{x0, Point{x0[0] + step[0], x0[1]}, Point{x0[0], x0[1] + step[1]}};
  std::array<double, 3> values{f(simplex[0]), f(simplex[1]), f(simplex[2])};

  auto lerp = [](const Point& from, const Point& to, double t) {
    return Point{from[0] + t * (to[0] - from[0]), from[1] + t * (to[1] - from[1])};
  };

  for (int iter = 0; iter < max_iter; ++iter) {
    std::array<int, 3> order{0, 1, 2};
    std::sort(order.begin(), order.end(), [&](int a, int b) { return values[a] < values[b]; });
    const int best = order[0], mid = order[1], worst = order[2];

    double size = 0.0;
    for (int v : {mid, worst}) {
      size = std::max({size, std::abs(simplex[v][0] - simplex[best][0]),
                       std::abs(simplex[v][1] - simplex[best][1])});
    }
    if (size < tol) break;

    const Point centroid{0.5 * (simplex[best][0] + simplex[mid][0]),
                         0.5 * (simplex[best][1] + simplex[mid][1])};
    const Point reflected = lerp(simplex[worst], centroid, 2.0);
    const double fr = f(reflected);

    if (fr < values[best]) {
      const Point expanded = lerp(simplex[worst], centroid, 3.0);
      const double fe = f(expanded);
      if (fe < fr) {
        simplex[worst] = expanded;
        values[worst] = fe;
      } else {
        simplex[worst] = reflected;
        values[worst] = fr;
      }
    } else if (fr < values[mid]) {
      simplex[worst] = reflected;
      values[worst] = fr;
    } else {
      const bool outside = fr < values[worst];
      const Point contracted = outside ? lerp(centroid, reflected, 0.5)
                                       : lerp(centroid, simplex[worst], 0.5);
      const double fc = f(contracted);
      if (fc < std::min(fr, values[worst])) {
        simplex[worst] = contracted;
        values[worst] = fc;
      } else {
        for (int v : {mid, worst}) {
          simplex[v] = lerp(simplex[best], simplex[v], 0.5);
          values[v] = f(simplex[v]);
        }
      }
    }
  }
  const auto it = std::min_element(values.begin(), values.end());
  return {simplex[static_cast<std::size_t>(it - values.begin())], *it};
}

std::vector<Complex> encoded_superposition(const std::vector<const EncodedMode*>& modes,
                                           double sign) {
  const std::size_t n = modes.size();
  std::vector<Complex> psi(std::size_t{1} << n);
  for (std::size_t idx = 0; idx < psi.size(); ++idx) {
    Complex plus = 1.0;
    Complex minus = 1.0;
    for (std::size_t mode = 0; mode < n; ++mode) {
      const std::size_t bit = (idx >> (n - 1 - mode)) & 1U;
      plus *= modes[mode]->coords_plus[bit];
      minus *= modes[mode]->coords_minus[bit];
    }
    psi[idx] = plus + sign * minus;
  }
  return psi;
}

double normalize_in_place(std::vector<Complex>& psi) {
  double n2 = 0.0;
  for (const auto& a : psi) n2 += std::norm(a);
  if (!(n2 > std::numeric_limits<double>::min())) {
    throw LimitRegimeError("oracle: superposition has zero norm (odd state at alpha = 0)");
  }
  const double inv = 1.0 / std::sqrt(n2);
  for (auto& a : psi) a *= inv;
  return inv;
}

}  // namespace

double FockVector::norm2() const {
  double s = 0.0;
  for (const auto& a : amplitudes) s += std::norm(a);
  return s;
}

Complex FockVector::inner(const FockVector& other) const {
  const std::size_t n = std::min(amplitudes.size(), other.amplitudes.size());
  Complex s = 0.0;
  for (std::size_t i = 0; i < n; ++i) s += std::conj(amplitudes[i]) * other.amplitudes[i];
  return s;
}

int truncation_nmax(const ModelParams& p) {
  const double a = p.alpha2();
  const int m = p.m.value();
  const double rule = std::ceil(a + 10.0 * std::sqrt(a) + m + 20.0);
  return std::max(m + 4, static_cast<int>(rule));
}

FockVector coherent_vector(double alpha, int nmax) {
  if (nmax < 0) throw TruncationError("coherent_vector: negative nmax");
  FockVector v;
  v.amplitudes.resize(static_cast<std::size_t>(nmax) + 1);
  Complex amp = std::exp(-0.5 * alpha * alpha);
  v.amplitudes[0] = amp;
  for (int n = 1; n <= nmax; ++n) {
    amp *= alpha / std::sqrt(static_cast<double>(n));
    v.amplitudes[static_cast<std::size_t>(n)] = amp;
  }
  if (std::norm(v.amplitudes.back()) > kTailBound) {
    throw TruncationError("coherent_vector: nmax=" + std::to_string(nmax) +
                          " too small for alpha=" + std::to_string(alpha));
  }
  return v;
}

PhotonAdded add_photons(const FockVector& v, int m) {
  if (m < 0) throw std::invalid_argument("add_photons: negative m");
  const int nmax = v.nmax();
  if (m > nmax) throw TruncationError("add_photons: no headroom for m photons");
  double spill = 0.0;
  for (int n = nmax - m + 1; n <= nmax; ++n) spill += std::norm(v.amplitudes[static_cast<std::size_t>(n)]);
  if (spill > kTailBound * std::max(v.norm2(), 1.0)) {
    throw TruncationError("add_photons: top " + std::to_string(m) +
                          " amplitudes carry weight; increase nmax");
  }

  FockVector raised = v;
  for (int step = 0; step < m; ++step) {
    FockVector next;
    next.amplitudes.assign(raised.amplitudes.size(), 0.0);
    for (int n = 0; n < nmax; ++n) {
      next.amplitudes[static_cast<std::size_t>(n) + 1] =
          std::sqrt(static_cast<double>(n) + 1.0) * raised.amplitudes[static_cast<std::size_t>(n)];
    }
    raised = std::move(next);
  }
  const double raw = raised.norm2();
  return {scaled(raised, 1.0 / std::sqrt(raw)), raw};
}

DensityMatrix::DensityMatrix(std::vector<std::size_t> dims, linalg::Matrix data)
    : dims_(std::move(dims)), data_(std::move(data)) {
  std::size_t total = 1;
  for (auto d : dims_) total *= d;
  if (data_.rows() != total || data_.cols() != total) {
    throw std::invalid_argument("DensityMatrix: dims do not match matrix shape");
  }
}

DensityMatrix DensityMatrix::projector(std::vector<std::size_t> dims, const std::vector<Complex>& psi) {
  linalg::Matrix m(psi.size(), psi.size());
  for (std::size_t r = 0; r < psi.size(); ++r) {
    for (std::size_t c = 0; c < psi.size(); ++c) m(r, c) = psi[r] * std::conj(psi[c]);
  }
  return DensityMatrix(std::move(dims), std::move(m));
}

double DensityMatrix::purity() const { return (data_ * data_).trace().real(); }

double DensityMatrix::min_eigenvalue() const { return linalg::eigenvalues(data_).front(); }

bool DensityMatrix::is_valid(double tol) const {
  return std::abs(trace() - 1.0) <= tol && hermiticity_error() <= tol &&
         min_eigenvalue() >= -10.0 * tol;
}

DensityMatrix partial_trace(const DensityMatrix& rho, std::vector<std::size_t> keep) {
  const auto& dims = rho.dims();
  std::sort(keep.begin(), keep.end());
  if (std::adjacent_find(keep.begin(), keep.end()) != keep.end()) {
    throw std::invalid_argument("partial_trace: repeated subsystem label");
  }
  std::vector<bool> kept(dims.size(), false);
  for (auto k : keep) {
    if (k >= dims.size()) throw std::invalid_argument("partial_trace: subsystem label out of range");
    kept[k] = true;
  }

  std::vector<std::size_t> out_dims;
  for (auto k : keep) out_dims.push_back(dims[k]);
  std::size_t out_size = 1;
  for (auto d : out_dims) out_size *= d;

  const std::size_t total = rho.dimension();
  // Split a full index into (kept index, traced index) using mixed radix,
  // subsystem 0 most significant.
  auto split = [&](std::size_t idx) {
    std::size_t kept_idx = 0, kept_scale = 1, traced_idx = 0, traced_scale = 1;
    for (std::size_t s = dims.size(); s-- > 0;) {
      const std::size_t digit = idx % dims[s];
      idx /= dims[s];
      if (kept[s]) {
        kept_idx += digit * kept_scale;
        kept_scale *= dims[s];
      } else {
        traced_idx += digit * traced_scale;
        traced_scale *= dims[s];
      }
    }
    return std::pair{kept_idx, traced_idx};
  };

  std::vector<std::pair<std::size_t, std::size_t>> parts(total);
  for (std::size_t i = 0; i < total; ++i) parts[i] = split(i);

  linalg::Matrix out(out_size, out_size);
  for (std::size_t r = 0; r < total; ++r) {
    for (std::size_t c = 0; c < total; ++c) {
      if (parts[r].second != parts[c].second) continue;
      out(parts[r].first, parts[c].first) += rho(r, c);
    }
  }
  return DensityMatrix(std::move(out_dims), std::move(out));
}

double von_neumann_entropy(const DensityMatrix& rho) {
  return entropy_of_spectrum(linalg::eigenvalues(rho.matrix()));
}

double wootters_concurrence(const DensityMatrix& rho) {
  if (rho.dims() != std::vector<std::size_t>{2, 2}) {
    throw std::invalid_argument("wootters_concurrence: expects a two-qubit state");
  }
  linalg::Matrix flip(4, 4);  // sigma_y (x) sigma_y
  flip(0, 3) = -1.0;
  flip(1, 2) = 1.0;
  flip(2, 1) = 1.0;
  flip(3, 0) = -1.0;
  const linalg::Matrix root = linalg::psd_sqrt(rho.matrix());
  // Singular values of sqrt(rho) Y conj(sqrt(rho)) are the square roots of
  // the eigenvalues of rho (Y rho* Y).
  const auto lambda = linalg::singular_values(root * flip * root.conjugate());
  return std::max(0.0, lambda[0] - lambda[1] - lambda[2] - lambda[3]);
}

double entanglement_of_formation(const DensityMatrix& rho) {
  const double c = std::min(wootters_concurrence(rho), 1.0);
  return binary_entropy(0.5 + 0.5 * std::sqrt(1.0 - c * c));
}

double conditional_entropy(const DensityMatrix& rho, Side measured, MeasurementPoint at) {
  if (rho.dims() != std::vector<std::size_t>{2, 2}) {
    throw std::invalid_argument("conditional_entropy: expects a two-qubit state");
  }
  const auto v = measurement_vector(at);
  const std::array<std::array<Complex, 2>, 2> basis{
      v, std::array<Complex, 2>{-std::conj(v[1]), std::conj(v[0])}};

  auto index = [measured](int meas, int other) {
    return measured == Side::first ? 2 * meas + other : 2 * other + meas;
  };

  double total = 0.0;
  for (const auto& b : basis) {
    // (<b| (x) 1) rho (|b> (x) 1) on the unmeasured qubit.
    std::array<std::array<Complex, 2>, 2> block{};
    for (int x = 0; x < 2; ++x) {
      for (int y = 0; y < 2; ++y) {
        Complex s = 0.0;
        for (int a = 0; a < 2; ++a) {
          for (int a2 = 0; a2 < 2; ++a2) {
            s += std::conj(b[a]) * rho(index(a, x), index(a2, y)) * b[a2];
          }
        }
        block[x][y] = s;
      }
    }
    const double prob = block[0][0].real() + block[1][1].real();
    if (prob <= 1e-300) continue;
    total += prob * qubit_entropy(block[0][0].real(), block[1][1].real(), block[0][1]);
  }
  return total;
}

DiscordResult discord_search(const DensityMatrix& rho, Side measured) {
  auto f = [&](MeasurementPoint at) { return conditional_entropy(rho, measured, at); };

  MeasurementPoint best{0.0, 0.0};
  double best_value = std::numeric_limits<double>::infinity();
  const double dtheta = std::numbers::pi / (kGridTheta - 1);
  const double dphi = 2.0 * std::numbers::pi / kGridPhi;
  for (int i = 0; i < kGridTheta; ++i) {
    for (int j = 0; j < kGridPhi; ++j) {
      const MeasurementPoint at{dtheta * i, dphi * j};
      const double value = f(at);
      if (value < best_value) {
        best_value = value;
        best = at;
      }
    }
  }

  const auto [x, fx] = nelder_mead(
      [&](const std::array<double, 2>& p) { return f({p[0], p[1]}); },
      {best.theta, best.phi}, {dtheta, dphi}, kAngleTol);
  if (fx < best_value) {
    best_value = fx;
    // Fold back into theta in [0, pi], phi in [0, 2 pi).
    double theta = std::fmod(std::abs(x[0]), 2.0 * std::numbers::pi);
    double phi = x[1];
    if (theta > std::numbers::pi) {
      theta = 2.0 * std::numbers::pi - theta;
      phi += std::numbers::pi;
    }
    phi = std::fmod(phi, 2.0 * std::numbers::pi);
    if (phi < 0.0) phi += 2.0 * std::numbers::pi;
    best = {theta, phi};
  }

  const DensityMatrix marginal = partial_trace(rho, {measured == Side::first ? 0U : 1U});
  const double d = von_neumann_entropy(marginal) - von_neumann_entropy(rho) + best_value;
  return {d, best_value, best};
}

double discord_numeric(const DensityMatrix& rho, Side measured) {
  return discord_search(rho, measured).discord;
}

EncodedMode encode_mode(double alpha, int m, int nmax) {
  EncodedMode mode;
  mode.plus = add_photons(coherent_vector(alpha, nmax), m).state;
  mode.minus = add_photons(coherent_vector(-alpha, nmax), m).state;

  FockVector even = combine(mode.plus, 1.0, mode.minus, 1.0);
  const double even_norm2 = even.norm2();
  if (even_norm2 < kGramFloor) throw std::runtime_error("encode_mode: singular Gram matrix");
  mode.e0 = scaled(even, 1.0 / std::sqrt(even_norm2));

  FockVector odd = combine(mode.plus, 1.0, mode.minus, -1.0);
  const Complex proj = mode.e0.inner(odd);
  odd = combine(odd, 1.0, mode.e0, -proj);
  const double odd_norm2 = odd.norm2();
  if (odd_norm2 < kGramFloor) {
    throw std::runtime_error("encode_mode: singular Gram matrix (alpha too small)");
  }
  mode.e1 = scaled(odd, 1.0 / std::sqrt(odd_norm2));

  mode.coords_plus = {mode.e0.inner(mode.plus), mode.e1.inner(mode.plus)};
  mode.coords_minus = {mode.e0.inner(mode.minus), mode.e1.inner(mode.minus)};
  return mode;
}

DensityMatrix TripartiteState::density() const {
  return DensityMatrix::projector({2, 2, 2}, std::vector<Complex>(amplitudes.begin(), amplitudes.end()));
}

Complex TripartiteState::fock_amplitude(int n1, int n2, int n3) const {
  auto at = [](const FockVector& v, int n) -> Complex {
    return (n >= 0 && n <= v.nmax()) ? v.amplitudes[static_cast<std::size_t>(n)] : Complex(0.0);
  };
  const double sign = parity_sign(params.k);
  return normalization * (at(mode1.plus, n1) * at(mode23.plus, n2) * at(mode23.plus, n3) +
                          sign * at(mode1.minus, n1) * at(mode23.minus, n2) * at(mode23.minus, n3));
}

TripartiteState build_tripartite_state(const ModelParams& p, int nmax) {
  if (p.k == Parity::odd && p.alpha2() == 0.0) {
    throw LimitRegimeError("build_tripartite: odd state at alpha = 0 is not normalizable");
  }
  const double alpha = std::sqrt(p.alpha2());
  TripartiteState st{p, encode_mode(alpha, p.m.value(), nmax), encode_mode(alpha, 0, nmax),
                     1.0, {}};
  auto psi = encoded_superposition({&st.mode1, &st.mode23, &st.mode23}, parity_sign(p.k));
  st.normalization = normalize_in_place(psi);
  std::copy(psi.begin(), psi.end(), st.amplitudes.begin());
  return st;
}

DensityMatrix build_tripartite(const ModelParams& p, int nmax) {
  return build_tripartite_state(p, nmax).density();
}

DensityMatrix build_bipartite(const ModelParams& p, int nmax) {
  if (p.k == Parity::odd && p.alpha2() == 0.0) {
    throw LimitRegimeError("build_bipartite: odd state at alpha = 0 is not normalizable");
  }
  const double alpha = std::sqrt(p.alpha2());
  const EncodedMode first = encode_mode(alpha, p.m.value(), nmax);
  const EncodedMode second = encode_mode(alpha, 0, nmax);
  auto psi = encoded_superposition({&first, &second}, parity_sign(p.k));
  normalize_in_place(psi);
  return DensityMatrix::projector({2, 2}, psi);
}

double VerificationRecord::max_entropy_deviation() const {
  double m = 0.0;
  for (const auto& f : fields) {
    if (!f.discord_class) m = std::max(m, std::abs(f.deviation));
  }
  return m;
}

double VerificationRecord::max_discord_deviation() const {
  double m = 0.0;
  for (const auto& f : fields) {
    if (f.discord_class) m = std::max(m, std::abs(f.deviation));
  }
  return m;
}

const FieldDeviation& VerificationRecord::worst() const {
  if (fields.empty()) throw std::logic_error("VerificationRecord: no fields");
  return *std::max_element(fields.begin(), fields.end(), [](const auto& a, const auto& b) {
    return std::abs(a.deviation) / a.bound < std::abs(b.deviation) / b.bound;
  });
}

bool VerificationRecord::passed() const {
  return std::all_of(fields.begin(), fields.end(), [](const auto& f) { return f.within_bound(); });
}

VerificationRecord verify(const ModelParams& p, std::optional<int> nmax, VerifyBounds bounds) {
  if (p.in_limit_regime()) {
    throw LimitRegimeError("verify: closed forms are not evaluated in the limit regime");
  }
  const int n = nmax.value_or(truncation_nmax(p));
  const CorrelationReport closed = report(p);

  const DensityMatrix rho123 = build_tripartite(p, n);
  const DensityMatrix rho12 = partial_trace(rho123, {0, 1});
  const DensityMatrix rho13 = partial_trace(rho123, {0, 2});
  const DensityMatrix rho23 = partial_trace(rho123, {1, 2});
  const DensityMatrix rho1 = partial_trace(rho123, {0});
  const DensityMatrix rho2 = partial_trace(rho123, {1});
  const DensityMatrix bell = build_bipartite(p, n);

  const double c1_23 = std::sqrt(std::max(0.0, 2.0 * (1.0 - rho1.purity())));
  const double c23 = wootters_concurrence(rho23);
  const double c13 = wootters_concurrence(rho13);
  auto eof = [](double c) {
    c = std::min(c, 1.0);
    return binary_entropy(0.5 + 0.5 * std::sqrt(1.0 - c * c));
  };

  const double d12 = discord_numeric(rho12, Side::first);
  const double d13 = discord_numeric(rho13, Side::first);
  const double d23 = discord_numeric(rho23, Side::first);
  const double d1_23 = von_neumann_entropy(rho1);

  struct Entry {
    std::string_view name;
    double oracle;
    bool discord_class;
  };
  const std::array<Entry, 16> entries{{
      {"S1", von_neumann_entropy(rho1), false},
      {"S2", von_neumann_entropy(rho2), false},
      {"S12", von_neumann_entropy(rho12), false},
      {"S23", von_neumann_entropy(rho23), false},
      {"C12_conc", wootters_concurrence(bell), false},
      {"C23_conc", c23, false},
      {"C13_conc", c13, false},
      {"C1_23_conc", c1_23, false},
      {"E12", von_neumann_entropy(partial_trace(bell, {0})), false},
      {"E23", eof(c23), false},
      {"E13", eof(c13), false},
      {"E1_23", eof(c1_23), false},
      {"D12", d12, true},
      {"D23", d23, true},
      {"D1_23", d1_23, true},
      {"Delta123", d1_23 - d12 - d13, true},
  }};

  VerificationRecord record{p, n, {}};
  for (const auto& e : entries) {
    const double cf = closed.field(e.name).value();
    record.fields.push_back({e.name, cf, e.oracle, cf - e.oracle, e.discord_class,
                             e.discord_class ? bounds.discord : bounds.entropy});
  }
  return record;
}

}  // namespace pacs::oracle
