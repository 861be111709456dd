#include <fstream>
#include <sstream>

#include "wirecat/error.hpp"
#include "wirecat/model.hpp"

namespace wirecat {

namespace {

std::vector<std::string> tokens_of(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> out;
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

[[noreturn]] void bad_line(int n, const std::string& line) {
  std::ostringstream msg;
  msg << "line " << n << ": cannot parse '" << line << "'";
  throw Error("ModelFormat", msg.str());
}

}  // namespace

FiniteModel load_model(std::istream& in, const std::string& name) {
  FiniteModel m;
  m.name = name;
  std::string section;
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::size_t hash = raw.find('#');
    std::string line = hash == std::string::npos ? raw : raw.substr(0, hash);
    const std::vector<std::string> t = tokens_of(line);
    if (t.empty()) continue;
    if (t[0].front() == '[') {
      if (t.size() != 1 || t[0].back() != ']') bad_line(line_no, raw);
      section = t[0].substr(1, t[0].size() - 2);
      continue;
    }
    if (section == "objects") {
      if (t[0] == "unit" && t.size() == 2) {
        m.unit = t[1];
      } else if (t[0] == "obj" && t.size() == 2) {
        m.objects.push_back(t[1]);
      } else if (t[0] == "tensor" && t.size() == 4) {
        m.tensor[{t[1], t[2]}] = t[3];
      } else {
        bad_line(line_no, raw);
      }
    } else if (section == "cells1") {
      if (t[0] == "cell" && t.size() == 4) {
        m.cells1.push_back({t[1], t[2], t[3]});
      } else if (t[0] == "id" && t.size() == 3) {
        m.identity1[t[1]] = t[2];
      } else {
        bad_line(line_no, raw);
      }
    } else if (section == "cells2") {
      if (t[0] == "cell" && t.size() == 4) {
        m.cells2.push_back({t[1], t[2], t[3]});
      } else if (t[0] == "id" && t.size() == 3) {
        m.identity2[t[1]] = t[2];
      } else if (t[0] == "inv" && t.size() == 3) {
        m.inverse2[t[1]] = t[2];
      } else {
        bad_line(line_no, raw);
      }
    } else if (section == "compose1") {
      if (t.size() != 3) bad_line(line_no, raw);
      m.compose1[{t[0], t[1]}] = t[2];
    } else if (section == "compose2") {
      if (t.size() != 3) bad_line(line_no, raw);
      m.compose2[{t[0], t[1]}] = t[2];
    } else if (section == "whisker") {
      if (t.size() != 4) bad_line(line_no, raw);
      if (t[0] == "post") {
        m.post_whisker[{t[1], t[2]}] = t[3];
      } else if (t[0] == "pre") {
        m.pre_whisker[{t[1], t[2]}] = t[3];
      } else {
        bad_line(line_no, raw);
      }
    } else if (section == "ltensor" || section == "rtensor") {
      if (t.size() != 4 || (t[0] != "1" && t[0] != "2")) bad_line(line_no, raw);
      auto& table = section == "ltensor"
                        ? (t[0] == "1" ? m.ltensor1 : m.ltensor2)
                        : (t[0] == "1" ? m.rtensor1 : m.rtensor2);
      table[{t[1], t[2]}] = t[3];
    } else if (section == "phi") {
      if (t.size() != 3) bad_line(line_no, raw);
      m.phi[{t[0], t[1]}] = t[2];
    } else if (section == "beta") {
      if (t.size() != 3) bad_line(line_no, raw);
      m.beta[{t[0], t[1]}] = t[2];
    } else if (section == "assignment") {
      if (t.size() != 3) bad_line(line_no, raw);
      if (t[0] == "obj") {
        m.assign_obj[t[1]] = t[2];
      } else if (t[0] == "gen1") {
        m.assign_gen1[t[1]] = t[2];
      } else if (t[0] == "gen2") {
        m.assign_gen2[t[1]] = t[2];
      } else {
        bad_line(line_no, raw);
      }
    } else if (section == "enum") {
      for (const auto& obj : t) m.enum_window.push_back(obj);
    } else {
      bad_line(line_no, raw);
    }
  }
  return m;
}

FiniteModel load_model_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("FileError", "cannot open '" + path + "'");
  std::string name = path;
  const std::size_t slash = name.find_last_of('/');
  if (slash != std::string::npos) name = name.substr(slash + 1);
  const std::size_t dot = name.find_last_of('.');
  if (dot != std::string::npos) name = name.substr(0, dot);
  return load_model(in, name);
}

namespace {

void emit_pairs(
    std::ostream& out, const char* prefix,
    const std::map<std::pair<std::string, std::string>, std::string>& t) {
  for (const auto& [key, value] : t) {
    out << prefix << key.first << " " << key.second << " " << value << "\n";
  }
}

}  // namespace

std::string save_model(const FiniteModel& m) {
  std::ostringstream out;
  out << "[objects]\n";
  out << "unit " << m.unit << "\n";
  for (const auto& o : m.objects) out << "obj " << o << "\n";
  emit_pairs(out, "tensor ", m.tensor);
  out << "[cells1]\n";
  for (const auto& c : m.cells1) {
    out << "cell " << c.id << " " << c.dom << " " << c.cod << "\n";
  }
  for (const auto& [obj, f] : m.identity1) {
    out << "id " << obj << " " << f << "\n";
  }
  out << "[cells2]\n";
  for (const auto& c : m.cells2) {
    out << "cell " << c.id << " " << c.src << " " << c.tgt << "\n";
  }
  for (const auto& [f, a] : m.identity2) out << "id " << f << " " << a << "\n";
  for (const auto& [a, b] : m.inverse2) out << "inv " << a << " " << b << "\n";
  out << "[compose1]\n";
  emit_pairs(out, "", m.compose1);
  out << "[compose2]\n";
  emit_pairs(out, "", m.compose2);
  out << "[whisker]\n";
  emit_pairs(out, "post ", m.post_whisker);
  emit_pairs(out, "pre ", m.pre_whisker);
  out << "[ltensor]\n";
  emit_pairs(out, "1 ", m.ltensor1);
  emit_pairs(out, "2 ", m.ltensor2);
  out << "[rtensor]\n";
  emit_pairs(out, "1 ", m.rtensor1);
  emit_pairs(out, "2 ", m.rtensor2);
  out << "[phi]\n";
  emit_pairs(out, "", m.phi);
  out << "[beta]\n";
  emit_pairs(out, "", m.beta);
  out << "[assignment]\n";
  for (const auto& [k, v] : m.assign_obj) out << "obj " << k << " " << v << "\n";
  for (const auto& [k, v] : m.assign_gen1) {
    out << "gen1 " << k << " " << v << "\n";
  }
  for (const auto& [k, v] : m.assign_gen2) {
    out << "gen2 " << k << " " << v << "\n";
  }
  out << "[enum]\n";
  for (const auto& o : m.enum_window) out << o << "\n";
  return out.str();
}

bool model_tables_equal(const FiniteModel& a, const FiniteModel& b) {
  auto c1_eq = [](const std::vector<Cell1Info>& x,
                  const std::vector<Cell1Info>& y) {
    if (x.size() != y.size()) return false;
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (x[i].id != y[i].id || x[i].dom != y[i].dom || x[i].cod != y[i].cod)
        return false;
    }
    return true;
  };
  auto c2_eq = [](const std::vector<Cell2Info>& x,
                  const std::vector<Cell2Info>& y) {
    if (x.size() != y.size()) return false;
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (x[i].id != y[i].id || x[i].src != y[i].src || x[i].tgt != y[i].tgt)
        return false;
    }
    return true;
  };
  return a.objects == b.objects && a.unit == b.unit && a.tensor == b.tensor &&
         c1_eq(a.cells1, b.cells1) && a.identity1 == b.identity1 &&
         a.compose1 == b.compose1 && c2_eq(a.cells2, b.cells2) &&
         a.identity2 == b.identity2 && a.compose2 == b.compose2 &&
         a.inverse2 == b.inverse2 && a.ltensor1 == b.ltensor1 &&
         a.rtensor1 == b.rtensor1 && a.ltensor2 == b.ltensor2 &&
         a.rtensor2 == b.rtensor2 && a.post_whisker == b.post_whisker &&
         a.pre_whisker == b.pre_whisker && a.phi == b.phi &&
         a.beta == b.beta && a.assign_obj == b.assign_obj &&
         a.assign_gen1 == b.assign_gen1 && a.assign_gen2 == b.assign_gen2 &&
         a.enum_window == b.enum_window;
}

}  // namespace wirecat
