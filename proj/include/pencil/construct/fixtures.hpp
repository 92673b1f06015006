#ifndef PENCIL_CONSTRUCT_FIXTURES_HPP
#define PENCIL_CONSTRUCT_FIXTURES_HPP

#include <string>
#include <utility>
#include <vector>

#include "pencil/construct/curve_map.hpp"

namespace pencil::fixtures {

/// A vector of binary forms in canonical text, with where it came from.
struct MapFixture {
  std::string name;
  std::string provenance;
  std::vector<std::string> entries;
};

/// The mu_6-equivariant rational normal quintic, slot weights (0,2,4,1,3,5).
inline const MapFixture &corrected_j() {
  static const MapFixture f{
      "j",
      "corrected: third slot S0*S1^4 (weight 4, degree 5)",
      {"1/1*S0^5", "1/1*S0^3*S1^2", "1/1*S0^1*S1^4", "1/1*S0^4*S1^1",
       "1/1*S0^2*S1^3", "1/1*S1^5"}};
  return f;
}

/// The vector as printed, third slot of degree 4.
inline const MapFixture &printed_j() {
  static const MapFixture f{
      "j (printed)",
      "verbatim: third slot S0*S1^3",
      {"1/1*S0^5", "1/1*S0^3*S1^2", "1/1*S0^1*S1^3", "1/1*S0^4*S1^1",
       "1/1*S0^2*S1^3", "1/1*S1^5"}};
  return f;
}

/// Closed form of j' in the dual basis X+0..X-2, fixed by the five-hyperplane
/// intersection: the point for s lies on the hyperplanes of s and of the four
/// fibre points outside its g-fibre. The X- block carries a minus sign; the
/// quadratic table only sees within-block products, so its rows match the
/// printed table with coefficient 1.
inline const MapFixture &corrected_jprime() {
  static const MapFixture f{
      "j'",
      "derived: dual-point closed form, X- block negated relative to print",
      {"1/1*S1^5", "1/1*S0^2*S1^3", "1/1*S0^4*S1^1", "-1/1*S0^1*S1^4",
       "-1/1*S0^3*S1^2", "-1/1*S0^5"}};
  return f;
}

/// The seven-entry vector as printed (S0*S1^4 repeated).
inline const MapFixture &printed_jprime() {
  static const MapFixture f{
      "j' (printed)",
      "verbatim: seven entries, S0*S1^4 repeated",
      {"1/1*S1^5", "1/1*S0^2*S1^3", "1/1*S0^4*S1^1", "1/1*S0^1*S1^4",
       "1/1*S0^1*S1^4", "1/1*S0^3*S1^2", "1/1*S0^5"}};
  return f;
}

struct TableRow {
  std::string left, right, image;
};

/// The printed pullback table, row for row, in canonical text over T0, T1.
inline const std::vector<TableRow> &printed_pullback_table() {
  static const std::vector<TableRow> rows{
      {"X+0", "X+0", "1/1*T1^5"},         {"X+0", "X+1", "1/1*T0^1*T1^4"},
      {"X+0", "X+2", "1/1*T0^2*T1^3"},    {"X+1", "X+1", "1/1*T0^2*T1^3"},
      {"X+1", "X+2", "1/1*T0^3*T1^2"},    {"X+2", "X+2", "1/1*T0^4*T1^1"},
      {"X-0", "X-0", "1/1*T0^1*T1^4"},    {"X-0", "X-1", "1/1*T0^2*T1^3"},
      {"X-0", "X-2", "1/1*T0^3*T1^2"},    {"X-1", "X-1", "1/1*T0^3*T1^2"},
      {"X-1", "X-2", "1/1*T0^4*T1^1"},    {"X-2", "X-2", "1/1*T0^5"}};
  return rows;
}

/// mu_6 weights of X+0..X-2 and of the dual coordinates.
inline const std::vector<int> &j_weights() {
  static const std::vector<int> w{0, 2, 4, 1, 3, 5};
  return w;
}
inline const std::vector<int> &jprime_weights() {
  static const std::vector<int> w{0, -2, -4, -1, -3, -5};
  return w;
}

inline ProjectiveCurveMap load(const MapFixture &f) {
  return parse_curve_map(f.entries, target_labels());
}

} // namespace pencil::fixtures

#endif // PENCIL_CONSTRUCT_FIXTURES_HPP
