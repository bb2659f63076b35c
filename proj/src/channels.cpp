#include "qsl/channels.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "qsl/errors.hpp"

namespace qsl {

namespace {

void require_probability(double p) {
  if (!(p >= 0.0 && p <= 1.0)) {
    std::ostringstream msg;
    msg << "p = " << p << " violates [0, 1]";
    throw InputError(msg.str());
  }
}

// c0 + c1 p + c2 p^2. Every closed-form element is at most quadratic in p.
struct Quadratic {
  double c0 = 0.0;
  double c1 = 0.0;
  double c2 = 0.0;

  [[nodiscard]] double value(double p) const noexcept { return c0 + p * (c1 + p * c2); }
  [[nodiscard]] double slope(double p) const noexcept { return c1 + 2.0 * c2 * p; }
  [[nodiscard]] int degree() const noexcept { return c2 != 0.0 ? 2 : (c1 != 0.0 ? 1 : 0); }

  friend Quadratic operator+(Quadratic a, Quadratic b) noexcept { return {a.c0 + b.c0, a.c1 + b.c1, a.c2 + b.c2}; }
  friend Quadratic operator-(Quadratic a, Quadratic b) noexcept { return {a.c0 - b.c0, a.c1 - b.c1, a.c2 - b.c2}; }
  friend Quadratic operator+(Quadratic a, double b) noexcept { return {a.c0 + b, a.c1, a.c2}; }
  friend Quadratic operator+(double a, Quadratic b) noexcept { return b + a; }
  friend Quadratic operator-(Quadratic a, double b) noexcept { return {a.c0 - b, a.c1, a.c2}; }
  friend Quadratic operator-(double a, Quadratic b) noexcept { return {a - b.c0, -b.c1, -b.c2}; }
  friend Quadratic operator*(double s, Quadratic a) noexcept { return {s * a.c0, s * a.c1, s * a.c2}; }
  friend Quadratic operator*(Quadratic a, double s) noexcept { return s * a; }
  friend Quadratic operator/(Quadratic a, double s) noexcept { return (1.0 / s) * a; }
  friend Quadratic operator-(Quadratic a) noexcept { return -1.0 * a; }
  friend Quadratic operator*(Quadratic a, Quadratic b) {
    if (a.degree() + b.degree() > 2) throw std::logic_error("Quadratic product exceeds degree 2");
    return {a.c0 * b.c0, a.c0 * b.c1 + a.c1 * b.c0, a.c0 * b.c2 + a.c1 * b.c1 + a.c2 * b.c0};
  }
};

Quadratic sq(Quadratic a) { return a * a; }

constexpr Quadratic kP{0.0, 1.0, 0.0};

// Real symmetric 8x8 pattern addressed by the descending 1..8 labels.
class ElementTable {
 public:
  void set(std::size_t row_label, std::size_t col_label, Quadratic q) {
    entries_.push_back({BasisConvention::internal_index(row_label), BasisConvention::internal_index(col_label), q});
  }
  void set_symmetric(std::size_t row_label, std::size_t col_label, Quadratic q) {
    set(row_label, col_label, q);
    if (row_label != col_label) set(col_label, row_label, q);
  }
  void negate(std::size_t row_label, std::size_t col_label) {
    const std::size_t r = BasisConvention::internal_index(row_label);
    const std::size_t c = BasisConvention::internal_index(col_label);
    for (auto& e : entries_) {
      if (e.row == r && e.col == c) e.q = -e.q;
    }
  }

  [[nodiscard]] CMatrix values(double p) const {
    CMatrix out(8);
    for (const auto& e : entries_) out(e.row, e.col) = e.q.value(p);
    return out;
  }
  [[nodiscard]] CMatrix slopes(double p) const {
    CMatrix out(8);
    for (const auto& e : entries_) out(e.row, e.col) = e.q.slope(p);
    return out;
  }

 private:
  struct Entry {
    std::size_t row;
    std::size_t col;
    Quadratic q;
  };
  std::vector<Entry> entries_;
};

// In the published element lists every thermal factor appears as one of
//   1/(1 + e^{w/T}) = n^2,   e^{w/T}/(1 + e^{w/T}) = 1/(1 + e^{-w/T}) = m^2,
//   1/sqrt(1 + e^{-w/T}) = m,
// and they are written that way here so that T -> 0 cannot overflow.
ElementTable depolarizing_elements(const Scenario& s) {
  const double a = s.alpha();
  const double b = s.beta();
  const double m = s.kruskal().m;
  const double n = s.kruskal().n;
  const double a2 = a * a;
  const double b2 = b * b;
  const Quadratic p = kP;

  ElementTable t;
  t.set(1, 1, (4.0 * sq(p - 1.0) * a2 * n * n + sq(b + 2.0 * p * b)) / 9.0);
  t.set(2, 2, 4.0 * m * m * sq(p - 1.0) * a2 / 9.0);
  const Quadratic r33 = -2.0 * ((p - 1.0) * (1.0 + 2.0 * p)) * (a2 * n * n + b2) / 9.0;
  t.set(3, 3, r33);
  t.set(5, 5, r33);
  const Quadratic r44 = -2.0 * m * m * ((p - 1.0) * (1.0 + 2.0 * p)) * a2 / 9.0;
  t.set(4, 4, r44);
  t.set(6, 6, r44);
  t.set(7, 7, (sq(a + 2.0 * p * a) * n * n + 4.0 * sq(p - 1.0) * b2) / 9.0);
  t.set(8, 8, m * m * sq(a + 2.0 * p * a) / 9.0);
  t.set_symmetric(1, 8, sq(1.0 - 4.0 * p) * a * b * m / 9.0);
  return t;
}

ElementTable bit_flip_elements(const Scenario& s) {
  const double a = s.alpha();
  const double b = s.beta();
  const double m = s.kruskal().m;
  const double n = s.kruskal().n;
  const double a2 = a * a;
  const double b2 = b * b;
  const Quadratic p = kP;

  ElementTable t;
  t.set(1, 1, sq(p - 1.0) * a2 * n * n + sq(p) * b2);
  t.set(2, 2, sq(a - p * a) * m * m);
  const Quadratic r33 = ((1.0 - p) * p) * (a2 * n * n + b2);
  t.set(3, 3, r33);
  t.set(5, 5, r33);
  const Quadratic r44 = ((1.0 - p) * p) * a2 * m * m;
  t.set(4, 4, r44);
  t.set(6, 6, r44);
  t.set(7, 7, sq(p) * a2 * n * n + sq(p - 1.0) * b2);
  t.set(8, 8, sq(p) * a2 * m * m);
  t.set_symmetric(1, 8, sq(p) * a * b * m);
  t.set_symmetric(2, 7, sq(p - 1.0) * a * b * m);
  const Quadratic cross = -((p - 1.0) * p) * a * b * m;
  t.set_symmetric(6, 3, cross);
  t.set_symmetric(5, 4, cross);
  return t;
}

ElementTable bit_phase_flip_elements(const Scenario& s) {
  ElementTable t = bit_flip_elements(s);
  t.negate(6, 3);
  t.negate(3, 6);
  t.negate(4, 5);
  t.negate(5, 4);
  return t;
}

ElementTable phase_flip_elements(const Scenario& s) {
  const double a = s.alpha();
  const double b = s.beta();
  const double m = s.kruskal().m;
  const double n = s.kruskal().n;
  const Quadratic p = kP;
  const Quadratic one{1.0, 0.0, 0.0};

  ElementTable t;
  t.set(8, 8, a * a * m * m * one);
  t.set(7, 7, a * a * n * n * one);
  t.set(1, 1, b * b * one);
  t.set_symmetric(8, 1, a * m * b * sq(1.0 - 2.0 * p));
  return t;
}

ElementTable elements(ChannelKind kind, const Scenario& s) {
  switch (kind) {
    case ChannelKind::dpc: return depolarizing_elements(s);
    case ChannelKind::bfc: return bit_flip_elements(s);
    case ChannelKind::bpfc: return bit_phase_flip_elements(s);
    case ChannelKind::pfc: return phase_flip_elements(s);
  }
  throw std::logic_error("unhandled ChannelKind");
}

}  // namespace

std::string_view to_string(ChannelKind kind) noexcept {
  switch (kind) {
    case ChannelKind::dpc: return "DPC";
    case ChannelKind::bfc: return "BFC";
    case ChannelKind::bpfc: return "BPFC";
    case ChannelKind::pfc: return "PFC";
  }
  return "?";
}

ChannelKind parse_channel_kind(std::string_view text) {
  std::string upper(text);
  std::transform(upper.begin(), upper.end(), upper.begin(), [](unsigned char c) { return std::toupper(c); });
  for (ChannelKind kind : kAllChannels) {
    if (upper == to_string(kind)) return kind;
  }
  throw InputError("unknown channel '" + std::string(text) + "' (expected DPC, BFC, BPFC or PFC)");
}

ChannelSpec ChannelSpec::create(ChannelKind kind, double p) {
  require_probability(p);
  return {kind, p};
}

std::array<double, 4> pauli_probs(ChannelKind kind, double p) {
  require_probability(p);
  switch (kind) {
    case ChannelKind::dpc: {
      const double rest = (1.0 - p) / 3.0;
      return {p, rest, rest, rest};
    }
    case ChannelKind::bfc: return {p, 1.0 - p, 0.0, 0.0};
    case ChannelKind::bpfc: return {p, 0.0, 1.0 - p, 0.0};
    case ChannelKind::pfc: return {p, 0.0, 0.0, 1.0 - p};
  }
  throw std::logic_error("unhandled ChannelKind");
}

DensityMatrix apply_channel(const DensityMatrix& rho, const ChannelSpec& spec) {
  const auto probs = pauli_probs(spec.kind, spec.p);
  const CMatrix charlie = pauli::identity();
  CMatrix out(8);
  for (std::size_t i1 = 0; i1 < 4; ++i1) {
    for (std::size_t i2 = 0; i2 < 4; ++i2) {
      const CMatrix k = kron(kron(pauli::sigma(i1), pauli::sigma(i2)), charlie);
      out += (probs[i1] * probs[i2]) * (k * rho.matrix() * dagger(k));
    }
  }
  return DensityMatrix::from(out);
}

DensityMatrix closed_form(ChannelKind kind, const Scenario& scenario, double p) {
  require_probability(p);
  return DensityMatrix::from(elements(kind, scenario).values(p));
}

CMatrix drho_dp(ChannelKind kind, const Scenario& scenario, double p) {
  require_probability(p);
  return elements(kind, scenario).slopes(p);
}

}  // namespace qsl
