#include "lfec/discharge.hpp"

#include <numeric>
#include <sstream>

namespace lfec::discharge {

Rat::Rat(long long n, long long d) : num(n), den(d) {
  if (den == 0) throw GraphError("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  long long g = std::gcd(num < 0 ? -num : num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
}

Rat Rat::operator+(const Rat& o) const { return Rat(num * o.den + o.num * den, den * o.den); }
Rat Rat::operator-(const Rat& o) const { return Rat(num * o.den - o.num * den, den * o.den); }
Rat Rat::operator*(const Rat& o) const { return Rat(num * o.num, den * o.den); }
Rat Rat::operator/(const Rat& o) const {
  if (o.num == 0) throw GraphError("rational division by zero");
  return Rat(num * o.den, den * o.num);
}
bool Rat::operator<(const Rat& o) const { return num * o.den < o.num * den; }

std::string Rat::str() const {
  if (den == 1) return std::to_string(num);
  return std::to_string(num) + "/" + std::to_string(den);
}

Rat ChargeMap::total() const {
  Rat t;
  for (auto& [v, r] : vertex_charge) t = t + r;
  for (auto& [f, r] : face_charge) t = t + r;
  return t;
}

const char* rule_name(Rule r) {
  switch (r) {
    case Rule::R1: return "R1";
    case Rule::R2: return "R2";
    case Rule::R3i: return "R3i";
    case Rule::R3ii: return "R3ii";
    case Rule::R3iii: return "R3iii";
    case Rule::R4: return "R4";
  }
  return "?";
}

ChargeMap initial_charges(const PlaneGraph& g) {
  ChargeMap cm;
  for (VertexId v : g.vertices()) cm.vertex_charge[v] = Rat(5LL * g.degree(v) - 14);
  for (const FaceWalk& w : g.faces())
    cm.face_charge[w.face] = Rat(2LL * (long long)w.darts.size() - 14);
  return cm;
}

namespace {

// Face incidences of v with multiplicity: one per corner (non-2-connected
// graphs may repeat a face).
std::vector<FaceId> corner_faces(const PlaneGraph& g, VertexId v) {
  std::vector<FaceId> out;
  for (DartId d : g.rotation(v)) out.push_back(g.face_of(d));
  return out;
}

}  // namespace

std::pair<ChargeMap, std::vector<Transfer>> apply_rules(const PlaneGraph& g) {
  ChargeMap initial = initial_charges(g);
  std::vector<Transfer> log;

  // Rules R1-R3: vertices send to incident faces. Amounts come from the
  // initial snapshot; all rules fire simultaneously.
  for (VertexId v : g.vertices()) {
    const int d = g.degree(v);
    const Rat ch = initial.vertex_charge.at(v);
    std::vector<FaceId> faces = corner_faces(g, v);

    if (d >= 4) {
      for (FaceId f : faces)
        if (g.face_length(f) <= 5)
          log.push_back({true, v, f, Rule::R1, ch / Rat(d)});
      // R2: along each edge incident to v, to a 5-face on one side when the
      // other side is a 7+-face.
      for (DartId dart : g.rotation(v)) {
        FaceId f1 = g.face_of(dart);
        FaceId f2 = g.face_of(g.twin(dart));
        if (g.face_length(f1) <= 5 && g.face_length(f2) >= 7)
          log.push_back({true, v, f1, Rule::R2, ch / Rat(2LL * d)});
        if (g.face_length(f2) <= 5 && g.face_length(f1) >= 7)
          log.push_back({true, v, f2, Rule::R2, ch / Rat(2LL * d)});
      }
    } else if (d == 3) {
      int big = 0;
      for (FaceId f : faces)
        if (g.face_length(f) >= 7) ++big;
      if (big == 2) {
        for (FaceId f : faces)
          if (g.face_length(f) <= 5) {
            log.push_back({true, v, f, Rule::R3i, Rat(1)});
            break;  // exactly one receiving corner remains
          }
      } else if (big == 1) {
        for (FaceId f : faces)
          if (g.face_length(f) == 5) log.push_back({true, v, f, Rule::R3ii, Rat(1, 2)});
      } else if (big == 0) {
        bool only5 = true;
        for (FaceId f : faces) only5 = only5 && g.face_length(f) == 5;
        if (only5)
          for (FaceId f : faces) log.push_back({true, v, f, Rule::R3iii, Rat(1, 3)});
      }
    }
  }

  // R4: every 8+-face with an incident 2-vertex splits its charge equally
  // among those incidences (vacuous when none).
  for (const FaceWalk& w : g.faces()) {
    if ((int)w.darts.size() < 8) continue;
    std::vector<VertexId> twos;
    for (DartId d : w.darts)
      if (g.degree(g.vertex_of(d)) == 2) twos.push_back(g.vertex_of(d));
    if (twos.empty()) continue;
    Rat share = initial.face_charge.at(w.face) / Rat((long long)twos.size());
    for (VertexId v : twos) log.push_back({false, w.face, v, Rule::R4, share});
  }

  ChargeMap final_charges = replay(initial, log);
  return {std::move(final_charges), std::move(log)};
}

ChargeMap replay(const ChargeMap& initial, const std::vector<Transfer>& log) {
  ChargeMap out = initial;
  for (const Transfer& t : log) {
    if (t.from_is_vertex) {
      out.vertex_charge[t.from] = out.vertex_charge[t.from] - t.amount;
      out.face_charge[t.to] = out.face_charge[t.to] + t.amount;
    } else {
      out.face_charge[t.from] = out.face_charge[t.from] - t.amount;
      out.vertex_charge[t.to] = out.vertex_charge[t.to] + t.amount;
    }
  }
  return out;
}

AuditReport audit(const PlaneGraph& g) {
  AuditReport rep;
  ChargeMap initial = initial_charges(g);
  auto [final_charges, log] = apply_rules(g);
  rep.total_initial = initial.total();
  rep.total_final = final_charges.total();
  for (auto& [v, r] : final_charges.vertex_charge)
    if (r.negative()) rep.negative_vertices.push_back({v, r});
  for (auto& [f, r] : final_charges.face_charge)
    if (r.negative()) rep.negative_faces.push_back({f, r});
  rep.detected = reduce::detect(g);

  for (const Transfer& t : log)
    if (t.rule == Rule::R4 && t.amount < Rat(2))
      rep.diagnostics.push_back("R4 share below 2 from face " + std::to_string(t.from) +
                                " (" + t.amount.str() + ")");
  return rep;
}

std::string render_audit(const AuditReport& r) {
  std::ostringstream os;
  os << "total_initial " << r.total_initial.str() << "\n";
  os << "total_final " << r.total_final.str() << "\n";
  if (r.detected)
    os << "detect kind=" << reduce::kind_name(r.detected->kind) << "\n";
  else
    os << "detect none\n";
  for (auto& [v, q] : r.negative_vertices)
    os << "negative v " << v << " " << q.str() << "\n";
  for (auto& [f, q] : r.negative_faces)
    os << "negative f " << f << " " << q.str() << "\n";
  for (const std::string& d : r.diagnostics) os << "note " << d << "\n";
  return os.str();
}

}  // namespace lfec::discharge
