#include "lpcoh/real_forms.hpp"

#include <algorithm>
#include <atomic>
#include <cassert>
#include <cctype>

namespace lpcoh {

namespace {

std::string strip_spaces(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  return s;
}

[[noreturn]] void parse_fail(std::string_view text, const std::string& why) {
  fail(ErrorKind::ParseError, "cannot parse group '" + std::string(text) + "': " + why);
}

struct Args {
  std::vector<long long> nums;
  std::string field;  // "R", "H", "C" or empty
};

// Splits "p,q", "n,R", "p,q,C" inside the parentheses.
Args split_args(std::string_view text, const std::string& inner) {
  Args a;
  std::size_t start = 0;
  auto take = [&](std::string_view piece) {
    if (piece.empty()) parse_fail(text, "empty parameter");
    if (piece == "R" || piece == "H" || piece == "C") {
      if (!a.field.empty()) parse_fail(text, "two field letters");
      a.field = piece;
      return;
    }
    long long v = 0;
    for (char c : piece) {
      if (c < '0' || c > '9') parse_fail(text, "bad parameter '" + std::string(piece) + "'");
      v = v * 10 + (c - '0');
      if (v > 1000000) fail(ErrorKind::UnsupportedRank, "parameter too large");
    }
    if (!a.field.empty()) parse_fail(text, "parameter after field letter");
    a.nums.push_back(v);
  };
  for (std::size_t i = 0; i <= inner.size(); ++i) {
    if (i == inner.size() || inner[i] == ',') {
      take(std::string_view(inner).substr(start, i - start));
      start = i + 1;
    }
  }
  return a;
}

RealFormSpec make_complex(RootSystemType t) {
  RealFormSpec g;
  g.family = Family::Complex;
  g.complex_type = t;
  return g;
}

// SO_m(C) by total dimension m, with the low-dimension isogeny cases
// rejected explicitly.
RealFormSpec complex_orthogonal(long long m) {
  if (m <= 2) fail(ErrorKind::NotSimple, "SO(" + std::to_string(m) + ",C) is not simple");
  if (m == 3) return make_complex(RootSystemType(RootFamily::A, 1));  // ~ SL(2,C)
  if (m == 4)
    fail(ErrorKind::NotSimple, "SO(4,C) is not simple (isogenous to SL(2,C) x SL(2,C))");
  if (m == 6)
    fail(ErrorKind::NotSimple, "SO(6,C) is isogenous to SL(4,C); use SL(4,C)");
  if (m % 2 == 1) return make_complex(RootSystemType(RootFamily::B, static_cast<int>(m / 2)));
  return make_complex(RootSystemType(RootFamily::D, static_cast<int>(m / 2)));
}

RealFormSpec exceptional(std::string_view text, const std::string& s) {
  static const std::pair<const char*, Family> table[] = {
      {"E6^6", Family::E6_Split},  {"E6^4", Family::E6_Rank4}, {"E6^2", Family::E6_Rank2},
      {"E7^7", Family::E7_Split},  {"E7^4", Family::E7_Rank4}, {"E7^3", Family::E7_Rank3},
      {"E8^8", Family::E8_Split},  {"E8^4", Family::E8_Rank4}, {"F4^4", Family::F4_Split},
      {"F4^1", Family::F4_Rank1},  {"G2^2", Family::G2_Split},
      {"EI", Family::E6_Split},    {"EII", Family::E6_Rank4},  {"EIII", Family::E6_Outer2},
      {"EIV", Family::E6_Rank2},   {"EV", Family::E7_Split},   {"EVI", Family::E7_Rank4},
      {"EVII", Family::E7_Rank3},  {"EVIII", Family::E8_Split},{"EIX", Family::E8_Rank4},
      {"FI", Family::F4_Split},    {"FII", Family::F4_Rank1},  {"G", Family::G2_Split},
  };
  for (const auto& [name, fam] : table)
    if (s == name) return RealFormSpec{fam, 0, 0, std::nullopt};
  parse_fail(text, "unknown exceptional form");
}

}  // namespace

int RealFormSpec::rank() const {
  switch (family) {
    case Family::SL_R:
    case Family::SL_H: return p - 1;
    case Family::SU:
    case Family::Sp_PQ:
    case Family::SO: return p;
    case Family::Sp_R: return p;
    case Family::SO_Star: return p / 2;
    case Family::Complex: return complex_type->rank;
    case Family::E6_Split: return 6;
    case Family::E6_Rank2: return 2;
    case Family::E7_Split: return 7;
    case Family::E7_Rank3: return 3;
    case Family::E8_Split: return 8;
    case Family::F4_Split: return 4;
    case Family::G2_Split: return 2;
    case Family::E6_Rank4:
    case Family::E7_Rank4:
    case Family::E8_Rank4: return 4;
    case Family::E6_Outer2: return 2;
    case Family::F4_Rank1: return 1;
  }
  return 0;
}

std::string RealFormSpec::render() const {
  auto two = [](const char* head, int a, int b, const char* tail) {
    return std::string(head) + std::to_string(a) + "," + std::to_string(b) + tail;
  };
  switch (family) {
    case Family::SL_R: return "SL(" + std::to_string(p) + ",R)";
    case Family::SL_H: return "SL(" + std::to_string(p) + ",H)";
    case Family::SU: return two("SU(", p, q, ")");
    case Family::Sp_R: return "Sp(" + std::to_string(2 * p) + ",R)";
    case Family::Sp_PQ: return two("Sp(", p, q, ")");
    case Family::SO: return two("SO(", p, q, ")");
    case Family::SO_Star: return "SO*(" + std::to_string(2 * p) + ")";
    case Family::Complex: {
      const RootSystemType& t = *complex_type;
      switch (t.family) {
        case RootFamily::A: return "SL(" + std::to_string(t.rank + 1) + ",C)";
        case RootFamily::B: return "SO(" + std::to_string(2 * t.rank + 1) + ",C)";
        case RootFamily::C: return "Sp(" + std::to_string(2 * t.rank) + ",C)";
        case RootFamily::D: return "SO(" + std::to_string(2 * t.rank) + ",C)";
        case RootFamily::E: return "E" + std::to_string(t.rank) + "(C)";
        case RootFamily::F: return "F4(C)";
        case RootFamily::G: return "G2(C)";
        default: break;
      }
      return "?";
    }
    case Family::E6_Split: return "E6^6";
    case Family::E6_Rank2: return "E6^2";
    case Family::E7_Split: return "E7^7";
    case Family::E7_Rank3: return "E7^3";
    case Family::E8_Split: return "E8^8";
    case Family::F4_Split: return "F4^4";
    case Family::G2_Split: return "G2^2";
    case Family::E6_Rank4: return "E6^4";
    case Family::E7_Rank4: return "E7^4";
    case Family::E8_Rank4: return "E8^4";
    case Family::E6_Outer2: return "EIII";
    case Family::F4_Rank1: return "F4^1";
  }
  return "?";
}

RealFormSpec parse_group(std::string_view text) {
  std::string s = strip_spaces(text);
  if (s.empty()) parse_fail(text, "empty");

  auto open = s.find('(');
  if (open == std::string::npos) return exceptional(text, s);

  if (s.back() != ')') parse_fail(text, "missing ')'");
  std::string head = s.substr(0, open);
  std::string inner = s.substr(open + 1, s.size() - open - 2);

  // exceptional complex groups: E6(C), F4(C), ...
  if (head == "E6" || head == "E7" || head == "E8" || head == "F4" || head == "G2") {
    if (inner != "C") parse_fail(text, "expected (C)");
    if (head[0] == 'E') return make_complex(RootSystemType(RootFamily::E, head[1] - '0'));
    if (head == "F4") return make_complex(RootSystemType(RootFamily::F, 4));
    return make_complex(RootSystemType(RootFamily::G, 2));
  }

  Args a = split_args(text, inner);

  if (head == "SL") {
    if (a.nums.size() != 1 || a.field.empty()) parse_fail(text, "expected SL(n,R|H|C)");
    int n = static_cast<int>(a.nums[0]);
    if (n <= 1) fail(ErrorKind::NotSimple, "SL(" + std::to_string(n) + ",...) is not simple");
    if (a.field == "C") return make_complex(RootSystemType(RootFamily::A, n - 1));
    return RealFormSpec{a.field == "R" ? Family::SL_R : Family::SL_H, n, 0, std::nullopt};
  }

  if (head == "SU") {
    if (a.nums.size() != 2 || !a.field.empty()) parse_fail(text, "expected SU(p,q)");
    int p = static_cast<int>(std::min(a.nums[0], a.nums[1]));
    int q = static_cast<int>(std::max(a.nums[0], a.nums[1]));
    if (p == 0) fail(ErrorKind::CompactGroup, "SU(0," + std::to_string(q) + ") = SU(" +
                                                  std::to_string(q) + ") is compact");
    return RealFormSpec{Family::SU, p, q, std::nullopt};
  }

  if (head == "Sp") {
    if (a.nums.size() == 1 && !a.field.empty()) {
      long long m = a.nums[0];
      if (m < 2 || m % 2 != 0)
        parse_fail(text, "Sp(" + std::to_string(m) + "," + a.field + ") needs even size >= 2");
      if (a.field == "H") parse_fail(text, "quaternionic form is Sp(p,q)");
      if (a.field == "C") {
        if (m == 2) return make_complex(RootSystemType(RootFamily::A, 1));  // Sp(2,C) ~ SL(2,C)
        return make_complex(RootSystemType(RootFamily::C, static_cast<int>(m / 2)));
      }
      return RealFormSpec{Family::Sp_R, static_cast<int>(m / 2), 0, std::nullopt};
    }
    if (a.nums.size() == 2 && a.field.empty()) {
      int p = static_cast<int>(std::min(a.nums[0], a.nums[1]));
      int q = static_cast<int>(std::max(a.nums[0], a.nums[1]));
      if (p == 0) fail(ErrorKind::CompactGroup, "Sp(0,q) = Sp(q) is compact");
      return RealFormSpec{Family::Sp_PQ, p, q, std::nullopt};
    }
    parse_fail(text, "expected Sp(2n,R), Sp(2n,C) or Sp(p,q)");
  }

  if (head == "SO") {
    if (!a.field.empty()) {
      if (a.field != "C") parse_fail(text, "orthogonal groups are SO(p,q), SO(n,C) or SO*(2r)");
      long long m = 0;
      if (a.nums.size() == 1) m = a.nums[0];
      else if (a.nums.size() == 2) m = a.nums[0] + a.nums[1];
      else parse_fail(text, "expected SO(n,C) or SO(p,q,C)");
      return complex_orthogonal(m);
    }
    if (a.nums.size() != 2) parse_fail(text, "expected SO(p,q)");
    int p = static_cast<int>(std::min(a.nums[0], a.nums[1]));
    int q = static_cast<int>(std::max(a.nums[0], a.nums[1]));
    if (p == 0)
      fail(ErrorKind::CompactGroup, "SO(0," + std::to_string(q) + ") = SO(" +
                                        std::to_string(q) + ") is compact");
    if (p + q <= 2)
      fail(ErrorKind::NotSimple, "SO(" + std::to_string(p) + "," + std::to_string(q) +
                                     ") is not a simple non-compact group");
    if (p == 2 && q == 2) fail(ErrorKind::NotSimple, "SO(2,2) is not simple");
    if (p == 3 && q == 3)
      fail(ErrorKind::NotSimple, "SO(3,3) is isogenous to SL(4,R); use SL(4,R)");
    return RealFormSpec{Family::SO, p, q, std::nullopt};
  }

  if (head == "SO*") {
    if (a.nums.size() != 1 || !a.field.empty()) parse_fail(text, "expected SO*(2r)");
    long long m = a.nums[0];
    if (m % 2 != 0) parse_fail(text, "SO*(m) needs even m");
    long long r = m / 2;
    if (r <= 1) fail(ErrorKind::NotSimple, "SO*(2) is abelian");
    if (r == 2) fail(ErrorKind::NotSimple, "SO*(4) is not simple");
    if (r == 3) fail(ErrorKind::NotSimple, "SO*(6) is isogenous to SU(3,1); use SU(1,3)");
    return RealFormSpec{Family::SO_Star, static_cast<int>(r), 0, std::nullopt};
  }

  parse_fail(text, "unknown family '" + head + "'");
}

std::vector<std::string> isogeny_notes(const RealFormSpec& g) {
  std::vector<std::string> notes;
  auto note = [&](const std::string& s) { notes.push_back(s); };
  switch (g.family) {
    case Family::SU:
      if (g.p == 1 && g.q == 1) note("SU(1,1) is isogenous to SL(2,R)");
      break;
    case Family::Sp_R:
      if (g.p == 1) note("Sp(2,R) = SL(2,R)");
      break;
    case Family::Sp_PQ:
      if (g.p == 1 && g.q == 1) note("Sp(1,1) is isogenous to SO(1,4) (Spin(4,1))");
      break;
    case Family::SL_H:
      if (g.p == 2) note("SL(2,H) is isogenous to SO(1,5) (Spin(5,1))");
      break;
    case Family::SO:
      if (g.p == 1 && g.q == 2) note("SO(1,2) is isogenous to SL(2,R) (PSL(2,R))");
      if (g.p == 1 && g.q == 3) note("SO(1,3) is isogenous to SL(2,C) (PSL(2,C))");
      break;
    default:
      break;
  }
  return notes;
}

namespace {

MultDatabase make_builtin_database() {
  MultDatabase db;
  auto add = [&](std::string key, std::string label, RootFamily fam, std::string rank_param,
                 std::map<std::string, std::string> mult, bool verified = true) {
    db.push_back(MultRule{std::move(key), std::move(label), fam, std::move(rank_param),
                          std::move(mult), verified});
  };
  add("SL_R", "A I", RootFamily::A, "n-1", {{"all", "1"}});
  add("SL_H", "A II", RootFamily::A, "n-1", {{"all", "4"}});
  add("SU p=q", "A III", RootFamily::C, "p", {{"e_i+-e_j", "2"}, {"2e_i", "1"}});
  add("SU p<q", "A III", RootFamily::BC, "p",
      {{"e_i", "2(q-p)"}, {"e_i+-e_j", "2"}, {"2e_i", "1"}}, false);
  add("Sp_R", "C I", RootFamily::C, "n", {{"e_i+-e_j", "1"}, {"2e_i", "1"}});
  add("Sp p=q", "C II", RootFamily::C, "p", {{"e_i+-e_j", "4"}, {"2e_i", "3"}});
  add("Sp p<q", "C II", RootFamily::BC, "p",
      {{"e_i", "4(q-p)"}, {"e_i+-e_j", "4"}, {"2e_i", "3"}}, false);
  add("SO p<q", "BD I", RootFamily::B, "p", {{"e_i", "q-p"}, {"e_i+-e_j", "1"}});
  add("SO p=1", "BD I", RootFamily::B, "1", {{"e_i", "q-p"}});
  add("SO p=q", "D I", RootFamily::D, "p", {{"all", "1"}});
  add("SO* r even", "D III", RootFamily::C, "r/2", {{"e_i+-e_j", "4"}, {"2e_i", "1"}});
  add("SO* r odd", "D III", RootFamily::BC, "(r-1)/2",
      {{"e_i", "4"}, {"e_i+-e_j", "4"}, {"2e_i", "1"}}, false);
  add("Complex", "complex", RootFamily::A, "inner rank", {{"all", "2"}});
  add("E6^6", "E I", RootFamily::E, "6", {{"all", "1"}});
  add("E6^2", "E IV", RootFamily::A, "2", {{"all", "8"}});
  add("E7^7", "E V", RootFamily::E, "7", {{"all", "1"}});
  add("E7^3", "E VII", RootFamily::C, "3", {{"e_i+-e_j", "8"}, {"2e_i", "1"}});
  add("E8^8", "E VIII", RootFamily::E, "8", {{"all", "1"}});
  add("F4^4", "F I", RootFamily::F, "4", {{"all", "1"}});
  add("G2^2", "G", RootFamily::G, "2", {{"all", "1"}});
  // non-admissible exceptional forms, stored type-only
  add("E6^4", "E II", RootFamily::F, "4", {}, false);
  add("E7^4", "E VI", RootFamily::F, "4", {}, false);
  add("E8^4", "E IX", RootFamily::F, "4", {}, false);
  add("EIII", "E III", RootFamily::BC, "2", {}, false);
  add("F4^1", "F II", RootFamily::BC, "1", {}, false);
  return db;
}

std::atomic<const MultDatabase*> g_override{nullptr};

long long eval_mult(const std::string& value, int p, int q) {
  if (value == "q-p") return q - p;
  if (value == "2(q-p)") return 2LL * (q - p);
  if (value == "4(q-p)") return 4LL * (q - p);
  long long v = 0;
  for (char c : value) {
    if (c < '0' || c > '9')
      fail(ErrorKind::InvalidDatabase, "unknown multiplicity value '" + value + "'");
    v = v * 10 + (c - '0');
  }
  return v;
}

// squared lengths of the classes a named class contributes to, for the
// (already rank-normalized) relative type
std::vector<long long> class_keys(const std::string& name, const RootSystemType& t) {
  auto all_keys = [&]() -> std::vector<long long> {
    switch (t.family) {
      case RootFamily::A:
      case RootFamily::D:
      case RootFamily::E: return {2};
      case RootFamily::B: return {1, 2};
      case RootFamily::C: return {2, 4};
      case RootFamily::F: return {1, 2};
      case RootFamily::G: return {2, 6};
      case RootFamily::BC: return t.rank >= 2 ? std::vector<long long>{1, 2, 4}
                                              : std::vector<long long>{1, 4};
    }
    return {};
  };
  if (name == "all") return all_keys();
  if (t.family == RootFamily::B) {
    if (name == "e_i") return {1};
    if (name == "e_i+-e_j") return {2};
  } else if (t.family == RootFamily::C) {
    if (name == "e_i+-e_j") return {2};
    if (name == "2e_i") return {4};
  } else if (t.family == RootFamily::BC) {
    if (name == "e_i") return {1};
    if (name == "e_i+-e_j") return t.rank >= 2 ? std::vector<long long>{2}
                                               : std::vector<long long>{};
    if (name == "2e_i") return {4};
  } else if (t.family == RootFamily::F || t.family == RootFamily::G) {
    long long lo = t.family == RootFamily::F ? 1 : 2;
    long long hi = t.family == RootFamily::F ? 2 : 6;
    if (name == "short") return {lo};
    if (name == "long") return {hi};
  }
  fail(ErrorKind::InvalidDatabase,
       "class '" + name + "' is not valid for family " + std::string(family_name(t.family)));
}

const MultRule& find_rule(const MultDatabase& db, const std::string& key) {
  for (const MultRule& r : db)
    if (r.key == key) return r;
  fail(ErrorKind::InvalidDatabase, "database has no rule '" + key + "'");
}

// (rule key, relative type before rank-1 normalization)
std::pair<std::string, RootSystemType> relative_case(const RealFormSpec& g) {
  using RT = RootSystemType;
  switch (g.family) {
    case Family::SL_R: return {"SL_R", RT(RootFamily::A, g.p - 1)};
    case Family::SL_H: return {"SL_H", RT(RootFamily::A, g.p - 1)};
    case Family::SU:
      if (g.p == g.q)
        return {"SU p=q", g.p >= 2 ? RT(RootFamily::C, g.p) : RT(RootFamily::A, 1)};
      return {"SU p<q", RT(RootFamily::BC, g.p)};
    case Family::Sp_R:
      return {"Sp_R", g.p >= 2 ? RT(RootFamily::C, g.p) : RT(RootFamily::A, 1)};
    case Family::Sp_PQ:
      if (g.p == g.q)
        return {"Sp p=q", g.p >= 2 ? RT(RootFamily::C, g.p) : RT(RootFamily::A, 1)};
      return {"Sp p<q", RT(RootFamily::BC, g.p)};
    case Family::SO:
      if (g.p == 1) return {"SO p=1", RT(RootFamily::A, 1)};
      if (g.p == g.q) return {"SO p=q", RT(RootFamily::D, g.p)};
      return {"SO p<q", RT(RootFamily::B, g.p)};
    case Family::SO_Star:
      if (g.p % 2 == 0) return {"SO* r even", RT(RootFamily::C, g.p / 2)};
      return {"SO* r odd", RT(RootFamily::BC, (g.p - 1) / 2)};
    case Family::Complex: return {"Complex", *g.complex_type};
    case Family::E6_Split: return {"E6^6", RT(RootFamily::E, 6)};
    case Family::E6_Rank2: return {"E6^2", RT(RootFamily::A, 2)};
    case Family::E7_Split: return {"E7^7", RT(RootFamily::E, 7)};
    case Family::E7_Rank3: return {"E7^3", RT(RootFamily::C, 3)};
    case Family::E8_Split: return {"E8^8", RT(RootFamily::E, 8)};
    case Family::F4_Split: return {"F4^4", RT(RootFamily::F, 4)};
    case Family::G2_Split: return {"G2^2", RT(RootFamily::G, 2)};
    case Family::E6_Rank4: return {"E6^4", RT(RootFamily::F, 4)};
    case Family::E7_Rank4: return {"E7^4", RT(RootFamily::F, 4)};
    case Family::E8_Rank4: return {"E8^4", RT(RootFamily::F, 4)};
    case Family::E6_Outer2: return {"EIII", RT(RootFamily::BC, 2)};
    case Family::F4_Rank1: return {"F4^1", RT(RootFamily::BC, 1)};
  }
  fail(ErrorKind::UnknownForm, "unhandled family");
}

// class name whose multiplicity survives when B_1 / C_1 degenerate to A_1
const char* surviving_class(const RealFormSpec& g) {
  if (g.family == Family::SO) return "e_i";
  return "2e_i";  // SU(1,1), Sp(2,R), Sp(1,1): the C_1 root is the long one
}

}  // namespace

const MultDatabase& builtin_database() {
  static const MultDatabase db = make_builtin_database();
  return db;
}

void validate_database(const MultDatabase& db) {
  const MultDatabase& ref = builtin_database();
  if (db.size() != ref.size())
    fail(ErrorKind::InvalidDatabase,
         "expected " + std::to_string(ref.size()) + " rules, got " + std::to_string(db.size()));
  for (const MultRule& rule : db) {
    const MultRule* match = nullptr;
    for (const MultRule& r : ref)
      if (r.key == rule.key) match = &r;
    if (!match) fail(ErrorKind::InvalidDatabase, "unknown rule key '" + rule.key + "'");
    if (rule.rs_family != match->rs_family)
      fail(ErrorKind::InvalidDatabase, "rule '" + rule.key + "' changes the relative family");
    if (rule.mult.empty() != match->mult.empty())
      fail(ErrorKind::InvalidDatabase,
           "rule '" + rule.key + "' must " + (match->mult.empty() ? "stay" : "not be") +
               " type-only");
    for (const auto& [name, value] : rule.mult) {
      if (!match->mult.count(name))
        fail(ErrorKind::InvalidDatabase,
             "rule '" + rule.key + "' has unexpected class '" + name + "'");
      eval_mult(value, 1, 2);  // recognizable value
    }
    if (rule.mult.size() != match->mult.size())
      fail(ErrorKind::InvalidDatabase, "rule '" + rule.key + "' is missing a class");
  }
}

void set_active_database(const MultDatabase* db) { g_override.store(db); }

const MultDatabase& active_database() {
  const MultDatabase* db = g_override.load();
  return db ? *db : builtin_database();
}

RestrictedDatum restricted_root_datum(const RealFormSpec& g) {
  auto [key, rs_type] = relative_case(g);
  const MultRule& rule = find_rule(active_database(), key);

  RestrictedDatum datum{rs_type, g.rank(), {}, rule.verified};
  assert(datum.rank == rs_type.rank);

  if (rule.mult.empty()) return datum;  // type-only form

  bool degenerate_rank1 = rs_type.family == RootFamily::A &&
                          (g.family == Family::SO || g.family == Family::SU ||
                           g.family == Family::Sp_R || g.family == Family::Sp_PQ);
  if (degenerate_rank1) {
    datum.mult[2] = eval_mult(rule.mult.at(surviving_class(g)), g.p, g.q);
    return datum;
  }

  for (const auto& [name, value] : rule.mult) {
    long long m = eval_mult(value, g.p, g.q);
    for (long long klass : class_keys(name, rs_type)) datum.mult[klass] = m;
  }
  return datum;
}

std::vector<CatalogEntry> list_families(int max_rank) {
  if (max_rank < 1) fail(ErrorKind::BadIndex, "max_rank must be >= 1");
  std::vector<CatalogEntry> out;
  auto add = [&](RealFormSpec rep, bool parametrized = false, std::string display = "") {
    auto [key, rs_type] = relative_case(rep);
    (void)rs_type;
    const MultRule& rule = find_rule(builtin_database(), key);
    CatalogEntry e;
    e.rank = rep.rank();
    e.cartan_label = rule.cartan_label;
    e.parametrized_q = parametrized;
    e.display = display.empty() ? rep.render() : std::move(display);
    e.rep = std::move(rep);
    out.push_back(std::move(e));
  };
  auto pq = [](Family f, int p, int q) { return RealFormSpec{f, p, q, std::nullopt}; };
  auto cx = [](RootFamily f, int l) {
    RealFormSpec g;
    g.family = Family::Complex;
    g.complex_type = RootSystemType(f, l);
    return g;
  };

  for (int l = 1; l <= max_rank; ++l) {
    add(pq(Family::SL_R, l + 1, 0));
    add(pq(Family::SL_H, l + 1, 0));
    add(pq(Family::SU, l, l));
    add(pq(Family::SU, l, l + 1), true,
        "SU(" + std::to_string(l) + ",q) q>" + std::to_string(l));
    add(pq(Family::Sp_R, l, 0));
    add(pq(Family::Sp_PQ, l, l));
    add(pq(Family::Sp_PQ, l, l + 1), true,
        "Sp(" + std::to_string(l) + ",q) q>" + std::to_string(l));
    if (l >= 4) add(pq(Family::SO, l, l));
    add(pq(Family::SO, l, l == 1 ? 3 : l + 1), true,
        "SO(" + std::to_string(l) + ",q) q>" + std::to_string(l));
    if (l >= 2) {
      add(pq(Family::SO_Star, 2 * l, 0));
      add(pq(Family::SO_Star, 2 * l + 1, 0));
    }
    add(cx(RootFamily::A, l));
    if (l >= 2) add(cx(RootFamily::B, l));
    if (l >= 2) add(cx(RootFamily::C, l));
    if (l >= 4) add(cx(RootFamily::D, l));
    switch (l) {
      case 1: add(pq(Family::F4_Rank1, 0, 0)); break;
      case 2:
        add(pq(Family::E6_Rank2, 0, 0));
        add(pq(Family::E6_Outer2, 0, 0));
        add(pq(Family::G2_Split, 0, 0));
        add(cx(RootFamily::G, 2));
        break;
      case 3: add(pq(Family::E7_Rank3, 0, 0)); break;
      case 4:
        add(pq(Family::E6_Rank4, 0, 0));
        add(pq(Family::E7_Rank4, 0, 0));
        add(pq(Family::E8_Rank4, 0, 0));
        add(pq(Family::F4_Split, 0, 0));
        add(cx(RootFamily::F, 4));
        break;
      case 6:
        add(pq(Family::E6_Split, 0, 0));
        add(cx(RootFamily::E, 6));
        break;
      case 7:
        add(pq(Family::E7_Split, 0, 0));
        add(cx(RootFamily::E, 7));
        break;
      case 8:
        add(pq(Family::E8_Split, 0, 0));
        add(cx(RootFamily::E, 8));
        break;
      default: break;
    }
  }
  return out;
}

}  // namespace lpcoh
