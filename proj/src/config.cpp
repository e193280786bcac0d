#include "filtreg/config.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "filtreg/errors.hpp"
#include "filtreg/experiment.hpp"

namespace filtreg {

namespace {

using Value = nlohmann::json;

std::string trim(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

/// Drops a trailing `#` comment outside quotes.
std::string strip_comment(const std::string& line) {
  bool quoted = false;
  for (std::size_t k = 0; k < line.size(); ++k) {
    if (line[k] == '"') quoted = !quoted;
    if (line[k] == '#' && !quoted) return line.substr(0, k);
  }
  return line;
}

int bracket_balance(const std::string& s) {
  int depth = 0;
  bool quoted = false;
  for (char c : s) {
    if (c == '"') quoted = !quoted;
    if (quoted) continue;
    if (c == '[') ++depth;
    if (c == ']') --depth;
  }
  return depth;
}

class ValueParser {
 public:
  ValueParser(std::string text, int line) : s_(std::move(text)), line_(line) {}

  Value parse() {
    skip();
    Value v = s_.empty() || s_[0] != '[' ? Value(trim(s_)) : list();
    skip();
    if (pos_ != s_.size() && s_[0] == '[') fail("trailing characters after list");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("line " + std::to_string(line_) + ": " + what);
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  Value list() {
    Value out = Value::array();
    ++pos_;
    skip();
    if (pos_ < s_.size() && s_[pos_] == ']') {
      ++pos_;
      return out;
    }
    while (true) {
      skip();
      if (pos_ >= s_.size()) fail("unterminated list");
      out.push_back(item());
      skip();
      if (pos_ >= s_.size()) fail("unterminated list");
      if (s_[pos_] == ',') {
        ++pos_;
        skip();
        if (pos_ < s_.size() && s_[pos_] == ']') {
          ++pos_;
          return out;
        }
        continue;
      }
      if (s_[pos_] == ']') {
        ++pos_;
        return out;
      }
      fail("expected ',' or ']'");
    }
  }
  Value item() {
    if (s_[pos_] == '[') return list();
    if (s_[pos_] == '"') {
      const auto close = s_.find('"', pos_ + 1);
      if (close == std::string::npos) fail("unterminated string");
      std::string v = s_.substr(pos_ + 1, close - pos_ - 1);
      pos_ = close + 1;
      return v;
    }
    const auto start = pos_;
    while (pos_ < s_.size() && s_[pos_] != ',' && s_[pos_] != ']' && s_[pos_] != '[') ++pos_;
    std::string v = trim(s_.substr(start, pos_ - start));
    if (v.empty()) fail("empty list element");
    return v;
  }

  std::string s_;
  int line_;
  std::size_t pos_ = 0;
};

std::vector<std::string> as_strings(const Value& v, const std::string& key) {
  if (!v.is_array()) throw ParseError(key + " must be a list");
  std::vector<std::string> out;
  for (const auto& e : v) {
    if (!e.is_string()) throw ParseError(key + " must be a flat list");
    out.push_back(e.get<std::string>());
  }
  return out;
}

const std::string& as_scalar(const Value& v, const std::string& key) {
  if (!v.is_string()) throw ParseError(key + " must be a scalar");
  return v.get_ref<const std::string&>();
}

std::int64_t as_int(const Value& v, const std::string& key) {
  const std::string& s = as_scalar(v, key);
  try {
    std::size_t used = 0;
    const long long out = std::stoll(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return out;
  } catch (const std::exception&) {
    throw ParseError(key + " must be an integer, got '" + s + "'");
  }
}

std::string quoted_list(const std::vector<std::string>& xs, bool quote) {
  std::string out = "[";
  for (std::size_t k = 0; k < xs.size(); ++k) {
    if (k) out += ", ";
    out += quote ? "\"" + xs[k] + "\"" : xs[k];
  }
  return out + "]";
}

}  // namespace

ExperimentConfig parse_config(const std::string& text) {
  ExperimentConfig c;
  bool have_vars = false, have_i = false, have_filtration = false;
  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = trim(strip_comment(raw));
    if (line.empty()) continue;
    const int start_line = lineno;
    while (bracket_balance(line) > 0) {
      if (!std::getline(in, raw)) throw ParseError("line " + std::to_string(start_line) + ": unbalanced brackets");
      ++lineno;
      line += " " + trim(strip_comment(raw));
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw ParseError("line " + std::to_string(start_line) + ": expected key = value");
    const std::string key = trim(line.substr(0, eq));
    const Value v = ValueParser(trim(line.substr(eq + 1)), start_line).parse();

    if (key == "name") {
      c.name = as_scalar(v, key);
    } else if (key == "tags") {
      c.tags = as_strings(v, key);
    } else if (key == "characteristic") {
      const auto p = as_int(v, key);
      if (p < 2 || p > 2147483647) throw ParseError("characteristic out of range");
      c.characteristic = static_cast<std::uint32_t>(p);
    } else if (key == "variables") {
      c.variables = as_strings(v, key);
      have_vars = true;
    } else if (key == "J") {
      c.j = as_strings(v, key);
    } else if (key == "I") {
      c.i = as_strings(v, key);
      have_i = true;
    } else if (key == "filtration") {
      if (as_scalar(v, key) != "adic") throw ParseError("filtration must be 'adic' (use chain for explicit chains)");
      c.chain.clear();
      have_filtration = true;
    } else if (key == "chain") {
      if (!v.is_array() || v.empty()) throw ParseError("chain must be a nonempty list of lists");
      c.chain.clear();
      for (const auto& level : v) c.chain.push_back(as_strings(level, key));
      have_filtration = true;
    } else if (key == "q") {
      c.q = as_strings(v, key);
    } else if (key == "checks") {
      c.checks = as_strings(v, key);
      for (const auto& sel : c.checks) {
        bool known = false;
        for (const auto& id : check_registry())
          known = known || id == sel || (id.size() > sel.size() && id.compare(0, sel.size(), sel) == 0 && id[sel.size()] == '.');
        if (!known) throw ParseError("line " + std::to_string(start_line) + ": unknown check '" + sel + "'");
      }
    } else if (key == "seed") {
      const auto s = as_int(v, key);
      if (s < 0) throw ParseError("seed must be nonnegative");
      c.seed = static_cast<std::uint64_t>(s);
    } else if (key == "cutoffCap") {
      c.cutoff_cap = static_cast<int>(as_int(v, key));
      if (c.cutoff_cap < 1) throw ParseError("cutoffCap must be positive");
    } else if (key == "retries") {
      c.retries = static_cast<int>(as_int(v, key));
      if (c.retries < 0) throw ParseError("retries must be nonnegative");
    } else if (key == "firstSample") {
      c.first_sample.clear();
      for (const auto& e : v) c.first_sample.push_back(as_int(e, key));
    } else {
      throw ParseError("line " + std::to_string(start_line) + ": unknown key '" + key + "'");
    }
  }
  if (!have_vars || c.variables.empty()) throw ParseError("missing variables");
  if (!have_i) throw ParseError("missing I");
  if (!have_filtration) throw ParseError("missing filtration or chain");
  return c;
}

ExperimentConfig load_config(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ParseError("cannot open " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return parse_config(ss.str());
}

std::string to_text(const ExperimentConfig& c) {
  std::ostringstream out;
  out << "name = " << c.name << "\n";
  if (!c.tags.empty()) out << "tags = " << quoted_list(c.tags, false) << "\n";
  out << "characteristic = " << c.characteristic << "\n";
  out << "variables = " << quoted_list(c.variables, false) << "\n";
  out << "J = " << quoted_list(c.j, true) << "\n";
  out << "I = " << quoted_list(c.i, true) << "\n";
  if (c.is_adic()) {
    out << "filtration = adic\n";
  } else {
    out << "chain = [";
    for (std::size_t k = 0; k < c.chain.size(); ++k) out << (k ? ", " : "") << quoted_list(c.chain[k], true);
    out << "]\n";
  }
  if (c.q) out << "q = " << quoted_list(*c.q, true) << "\n";
  if (!c.checks.empty()) out << "checks = " << quoted_list(c.checks, false) << "\n";
  out << "seed = " << c.seed << "\n";
  out << "cutoffCap = " << c.cutoff_cap << "\n";
  out << "retries = " << c.retries << "\n";
  if (!c.first_sample.empty()) {
    std::vector<std::string> xs;
    for (auto v : c.first_sample) xs.push_back(std::to_string(v));
    out << "firstSample = " << quoted_list(xs, false) << "\n";
  }
  return out.str();
}

bool check_selected(const ExperimentConfig& c, const std::string& id) {
  if (c.checks.empty()) return true;
  for (const auto& sel : c.checks) {
    if (sel == id) return true;
    if (id.size() > sel.size() && id.compare(0, sel.size(), sel) == 0 && id[sel.size()] == '.') return true;
  }
  return false;
}

}  // namespace filtreg
