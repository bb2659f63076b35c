#pragma once

// Pauli noise on Alice's and Bob's qubits; Charlie's qubit is untouched.
//
//   rho_t = sum_{i,j} p_i p_j (s_i (x) s_j (x) s_0) rho (s_i (x) s_j (x) s_0)
//
// The decoherence parameter p is the identity weight: p = 1 is the noiseless
// channel and evolution runs from p = 1 down to the final value p_tau.

#include <array>
#include <string_view>

#include "qsl/qmatrix.hpp"
#include "qsl/spacetime.hpp"

namespace qsl {

enum class ChannelKind { dpc, bfc, bpfc, pfc };

inline constexpr std::array<ChannelKind, 4> kAllChannels = {ChannelKind::dpc, ChannelKind::bfc, ChannelKind::bpfc,
                                                            ChannelKind::pfc};

// "DPC", "BFC", "BPFC", "PFC".
std::string_view to_string(ChannelKind kind) noexcept;
// Case-insensitive inverse of to_string; throws InputError.
ChannelKind parse_channel_kind(std::string_view text);

struct ChannelSpec {
  ChannelKind kind;
  double p;

  // Throws InputError unless p is in [0, 1].
  static ChannelSpec create(ChannelKind kind, double p);
};

// Single-qubit weights [p0, p1, p2, p3] on (I, X, Y, Z).
std::array<double, 4> pauli_probs(ChannelKind kind, double p);

// Literal 16-term Kraus sum. Works for any three-qubit input state.
DensityMatrix apply_channel(const DensityMatrix& rho, const ChannelSpec& spec);

// Evolved state of physical_state(scenario) from the elementwise closed forms.
DensityMatrix closed_form(ChannelKind kind, const Scenario& scenario, double p);

// Exact d/dp of closed_form. Hermitian and traceless.
CMatrix drho_dp(ChannelKind kind, const Scenario& scenario, double p);

}  // namespace qsl
