#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>

namespace signmotif {

/// Link sign in an undirected signed network.
enum class Sign : std::int8_t { Negative = -1, Positive = +1 };

inline int sign_value(Sign s) { return static_cast<int>(s); }
inline bool is_negative(Sign s) { return s == Sign::Negative; }

/// The nine signed predictor patterns: three triads (context = the two
/// links joining the target endpoints to a common neighbor) and six quads
/// (context = the three-link path joining the target endpoints through a
/// neighboring link, canonical up to reversal).
enum class Predictor : std::uint8_t {
  T_pp = 0,  // triad, context ++
  T_pm,      // triad, context +-
  T_mm,      // triad, context --
  Q_ppp,     // quad, context +++
  Q_ppm,     // quad, context ++-  (== -++)
  Q_pmp,     // quad, context +-+
  Q_pmm,     // quad, context +--  (== --+)
  Q_mpm,     // quad, context -+-
  Q_mmm,     // quad, context ---
};

inline constexpr std::size_t kNumPredictors = 9;

enum class MotifKind : std::uint8_t { Triad, Quad };

constexpr std::array<Predictor, kNumPredictors> catalog() {
  return {Predictor::T_pp,  Predictor::T_pm,  Predictor::T_mm,
          Predictor::Q_ppp, Predictor::Q_ppm, Predictor::Q_pmp,
          Predictor::Q_pmm, Predictor::Q_mpm, Predictor::Q_mmm};
}

constexpr std::size_t predictor_index(Predictor p) {
  return static_cast<std::size_t>(p);
}

constexpr MotifKind predictor_kind(Predictor p) {
  return predictor_index(p) < 3 ? MotifKind::Triad : MotifKind::Quad;
}

constexpr std::string_view predictor_label(Predictor p) {
  constexpr std::array<std::string_view, kNumPredictors> labels = {
      "T++", "T+-", "T--", "Q+++", "Q++-", "Q+-+", "Q+--", "Q-+-", "Q---"};
  return labels[predictor_index(p)];
}

/// Default mapping from canonical labels to the conventional S-indices used
/// in result tables. The assignment keeps the triads at S1/S4/S7 ordered by
/// the number of negative context links, and orders the quads likewise.
/// Override via the CLI when comparing against a source that numbers the
/// patterns differently.
constexpr int default_s_index(Predictor p) {
  constexpr std::array<int, kNumPredictors> s = {1, 4, 7, 2, 3, 5, 6, 8, 9};
  return s[predictor_index(p)];
}

/// Triad predictor from the two context signs; order-insensitive.
constexpr Predictor triad_predictor(Sign a, Sign b) {
  const int minus = (a == Sign::Negative) + (b == Sign::Negative);
  return static_cast<Predictor>(minus);
}

/// Quad predictor from the path context signs (s_AC, s_CD, s_DB),
/// canonicalized up to reversal of the path.
constexpr Predictor quad_predictor(Sign ac, Sign cd, Sign db) {
  const unsigned bits = (unsigned(ac == Sign::Negative) << 2) |
                        (unsigned(cd == Sign::Negative) << 1) |
                        unsigned(db == Sign::Negative);
  const unsigned rev = (unsigned(db == Sign::Negative) << 2) |
                       (unsigned(cd == Sign::Negative) << 1) |
                       unsigned(ac == Sign::Negative);
  const unsigned canon = bits < rev ? bits : rev;
  // canonical bit patterns {000,001,010,011,101,111} -> Q_ppp..Q_mmm
  constexpr std::array<std::uint8_t, 8> table = {3, 4, 5, 6, 0xFF, 7, 0xFF, 8};
  return static_cast<Predictor>(table[canon]);
}

/// Parses "T++", "Q+-+", ... or an S-label ("S1".."S9", default mapping).
std::optional<Predictor> predictor_from_label(std::string_view label);

}  // namespace signmotif
