#pragma once
// Mechanical audit of the discharging argument: exact charges ch(v) =
// 5 d(v) - 14 and ch(a) = 2 l(a) - 14, rules R1-R4 as logged transfers,
// conservation of the -28 total, and negativity reporting. All arithmetic
// is exact rational; no floating point in this module.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lfec/embed.hpp"
#include "lfec/reduce.hpp"

namespace lfec::discharge {

struct Rat {
  long long num = 0;
  long long den = 1;

  Rat() = default;
  Rat(long long n) : num(n) {}
  Rat(long long n, long long d);

  Rat operator+(const Rat& o) const;
  Rat operator-(const Rat& o) const;
  Rat operator*(const Rat& o) const;
  Rat operator/(const Rat& o) const;
  Rat operator-() const { return Rat(-num, den); }
  bool operator==(const Rat& o) const { return num == o.num && den == o.den; }
  bool operator!=(const Rat& o) const { return !(*this == o); }
  bool operator<(const Rat& o) const;
  bool negative() const { return num < 0; }

  std::string str() const;  // "p/q", integers without the /q
};

struct ChargeMap {
  std::map<VertexId, Rat> vertex_charge;
  std::map<FaceId, Rat> face_charge;

  Rat total() const;
};

enum class Rule { R1, R2, R3i, R3ii, R3iii, R4 };
const char* rule_name(Rule r);

struct Transfer {
  bool from_is_vertex;  // R1-R3 transfer vertex -> face, R4 face -> vertex
  int from;
  int to;
  Rule rule;
  Rat amount;
};

ChargeMap initial_charges(const PlaneGraph& g);

// All rules fire simultaneously from the initial snapshot. Returns the final
// charges and the transfer log; replaying the log from the initial charges
// reproduces the final charges exactly.
std::pair<ChargeMap, std::vector<Transfer>> apply_rules(const PlaneGraph& g);

ChargeMap replay(const ChargeMap& initial, const std::vector<Transfer>& log);

struct AuditReport {
  Rat total_initial;
  Rat total_final;
  std::vector<std::pair<VertexId, Rat>> negative_vertices;
  std::vector<std::pair<FaceId, Rat>> negative_faces;
  std::optional<reduce::Configuration> detected;  // configuration whose absence
                                                  // the nonnegativity proof assumes
  std::vector<std::string> diagnostics;  // e.g. R4 share below 2
};

AuditReport audit(const PlaneGraph& g);
std::string render_audit(const AuditReport& r);

}  // namespace lfec::discharge
