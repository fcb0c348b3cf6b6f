// SPDX-License-Identifier: Apache-2.0
#include "svagen/vcd.hpp"

#include <cctype>
#include <cstddef>
#include <map>
#include <utility>

namespace svagen::trace {
namespace {

struct Tok {
  std::string text;
  int line = 0;
  std::size_t begin = 0;
  std::size_t end = 0;
  bool eof() const { return text.empty(); }
};

class Cursor {
 public:
  explicit Cursor(const std::string& src) : src_(src) {}

  Tok next() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) {
      if (src_[pos_] == '\n') ++line_;
      ++pos_;
    }
    Tok t;
    t.line = line_;
    t.begin = pos_;
    while (pos_ < src_.size() && !std::isspace(static_cast<unsigned char>(src_[pos_])))
      t.text.push_back(src_[pos_++]);
    t.end = pos_;
    return t;
  }

 private:
  const std::string& src_;
  std::size_t pos_ = 0;
  int line_ = 1;
};

struct Var {
  std::string key;
  int width = 1;
  int decl_line = 0;
  Value cur;  // starts unknown
};

class VcdParser {
 public:
  VcdParser(const std::string& src, std::string clock)
      : cur_(src), clock_(std::move(clock)) {}

  IngestResult run() {
    if (!header()) return std::move(out_);
    if (!locate_clock()) return std::move(out_);
    if (!value_sections()) return std::move(out_);
    finalize_section();
    if (rows_.empty()) {
      out_.diagnostics.push_back(make_error(
          "NoEdges", "clock '" + clock_ + "' never rises", {0, 0}));
      return std::move(out_);
    }
    Trace t;
    t.cycles = static_cast<int>(rows_.size());
    t.edge_times = std::move(edge_times_);
    t.timescale = timescale_;
    for (std::size_t v = 0; v < vars_.size(); ++v) {
      std::vector<Value> series;
      series.reserve(rows_.size());
      for (const auto& row : rows_) series.push_back(row[v]);
      t.signals[vars_[v].key] = std::move(series);
      t.widths[vars_[v].key] = vars_[v].width;
    }
    out_.trace = std::move(t);
    return std::move(out_);
  }

 private:
  void malformed(const Tok& at, const std::string& what) {
    out_.diagnostics.push_back(make_error(
        "MalformedVcd", "line " + std::to_string(at.line) + ": " + what,
        {at.begin, at.end}));
  }

  bool skip_to_end(const Tok& opener) {
    for (;;) {
      Tok t = cur_.next();
      if (t.eof()) {
        malformed(opener, opener.text + " not closed by $end");
        return false;
      }
      if (t.text == "$end") return true;
    }
  }

  // Returns the declared key for a var name plus its optional bracket
  // suffix token: "[3]" selects an array element ("name[3]"), "[m:n]"
  // is the vector bit range and is dropped.
  static std::string normalize_key(const std::string& name, const std::string& suffix) {
    std::string key = name;
    auto embedded = key.find('[');
    if (embedded != std::string::npos) {
      std::string inner = key.substr(embedded);
      if (inner.find(':') != std::string::npos) key.erase(embedded);
    }
    if (!suffix.empty() && suffix.front() == '[' && suffix.back() == ']' &&
        suffix.find(':') == std::string::npos)
      key += suffix;
    return key;
  }

  bool parse_var(const Tok& opener) {
    Tok type = cur_.next();
    Tok width = cur_.next();
    Tok id = cur_.next();
    Tok name = cur_.next();
    if (type.eof() || width.eof() || id.eof() || name.eof()) {
      malformed(opener, "$var is incomplete");
      return false;
    }
    int w = 0;
    for (char c : width.text) {
      if (!std::isdigit(static_cast<unsigned char>(c))) {
        malformed(width, "bad width '" + width.text + "'");
        return false;
      }
      w = w * 10 + (c - '0');
    }
    if (w < 1 || w > 64) {
      malformed(width, "width " + width.text + " outside supported 1..64");
      return false;
    }
    std::string suffix;
    Tok t = cur_.next();
    if (!t.eof() && t.text != "$end") {
      suffix = t.text;
      t = cur_.next();
    }
    if (t.text != "$end") {
      malformed(opener, "$var not closed by $end");
      return false;
    }
    std::string key = normalize_key(name.text, suffix);
    auto dup = key_index_.find(key);
    if (dup != key_index_.end()) {
      malformed(name, "signal '" + key + "' declared twice");
      return false;
    }
    key_index_[key] = vars_.size();
    id_index_[id.text].push_back(vars_.size());
    vars_.push_back({key, w, name.line, std::nullopt});
    return true;
  }

  bool header() {
    for (;;) {
      Tok t = cur_.next();
      if (t.eof()) {
        malformed(t, "input ended before $enddefinitions");
        return false;
      }
      if (t.text == "$enddefinitions") return skip_to_end(t);
      if (t.text == "$var") {
        if (!parse_var(t)) return false;
        continue;
      }
      if (t.text == "$timescale") {
        Tok opener = t;
        for (;;) {
          t = cur_.next();
          if (t.eof()) {
            malformed(opener, "$timescale not closed by $end");
            return false;
          }
          if (t.text == "$end") break;
          timescale_ += t.text;
        }
        continue;
      }
      if (t.text == "$scope" || t.text == "$upscope" || t.text == "$date" ||
          t.text == "$version" || t.text == "$comment") {
        if (!skip_to_end(t)) return false;
        continue;
      }
      malformed(t, "unexpected '" + t.text + "' in header");
      return false;
    }
  }

  bool locate_clock() {
    auto it = key_index_.find(clock_);
    if (it == key_index_.end()) {
      out_.diagnostics.push_back(make_error(
          "ClockNotFound", "clock '" + clock_ + "' is not declared", {0, 0}));
      return false;
    }
    clock_var_ = it->second;
    if (vars_[clock_var_].width != 1) {
      Tok at;
      at.line = vars_[clock_var_].decl_line;
      malformed(at, "clock '" + clock_ + "' is not a 1-bit variable");
      return false;
    }
    return true;
  }

  static Value scalar_value(char c) {
    if (c == '0') return Value{0};
    if (c == '1') return Value{1};
    return std::nullopt;  // x/z
  }

  bool vector_value(const Tok& bits_tok, int width, Value& out) {
    std::string bits = bits_tok.text.substr(1);
    if (bits.empty()) {
      malformed(bits_tok, "empty vector value");
      return false;
    }
    for (char c : bits)
      if (c == 'x' || c == 'X' || c == 'z' || c == 'Z') {
        out = std::nullopt;
        return true;
      }
    std::size_t first1 = bits.find_first_not_of('0');
    if (first1 == std::string::npos) {
      out = Value{0};
      return true;
    }
    std::string sig = bits.substr(first1);
    if (static_cast<int>(sig.size()) > width || sig.size() > 64) {
      malformed(bits_tok, "vector value wider than declared width");
      return false;
    }
    std::uint64_t v = 0;
    for (char c : sig) {
      if (c != '0' && c != '1') {
        malformed(bits_tok, "bad vector digit '" + std::string(1, c) + "'");
        return false;
      }
      v = (v << 1) | static_cast<std::uint64_t>(c - '0');
    }
    out = Value{v};
    return true;
  }

  bool record_change(const Tok& at, const std::string& id, Value v) {
    auto it = id_index_.find(id);
    if (it == id_index_.end()) {
      malformed(at, "value change for undeclared id '" + id + "'");
      return false;
    }
    for (std::size_t idx : it->second) pending_.emplace_back(idx, v);
    return true;
  }

  // Closes the current #time section: detects a clock rising edge
  // (0 before the section, 1 after) and, on an edge, samples every
  // signal's pre-section value, then applies the section's changes.
  void finalize_section() {
    if (!have_time_) {
      // Changes before the first #time establish initial values.
      for (const auto& [idx, v] : pending_) vars_[idx].cur = v;
      pending_.clear();
      return;
    }
    Value pre = vars_[clock_var_].cur;
    Value post = pre;
    for (const auto& [idx, v] : pending_)
      if (idx == clock_var_) post = v;
    if (pre.has_value() && *pre == 0 && post.has_value() && *post == 1) {
      edge_times_.push_back(time_);
      std::vector<Value> row;
      row.reserve(vars_.size());
      for (const auto& var : vars_) row.push_back(var.cur);
      rows_.push_back(std::move(row));
    }
    for (const auto& [idx, v] : pending_) vars_[idx].cur = v;
    pending_.clear();
  }

  bool value_sections() {
    for (;;) {
      Tok t = cur_.next();
      if (t.eof()) return true;
      if (t.text[0] == '#') {
        finalize_section();
        std::int64_t v = 0;
        if (t.text.size() == 1) {
          malformed(t, "bare '#' without a timestamp");
          return false;
        }
        for (std::size_t i = 1; i < t.text.size(); ++i) {
          char c = t.text[i];
          if (!std::isdigit(static_cast<unsigned char>(c))) {
            malformed(t, "bad timestamp '" + t.text + "'");
            return false;
          }
          v = v * 10 + (c - '0');
        }
        if (have_time_ && v <= time_) {
          malformed(t, "timestamp not strictly increasing");
          return false;
        }
        time_ = v;
        have_time_ = true;
        continue;
      }
      if (t.text == "$dumpvars" || t.text == "$end") continue;
      if (t.text == "$dumpall" || t.text == "$dumpoff" || t.text == "$dumpon") {
        malformed(t, t.text + " windows are not supported");
        return false;
      }
      if (t.text == "$comment") {
        if (!skip_to_end(t)) return false;
        continue;
      }
      char c = t.text[0];
      if (c == 'b' || c == 'B') {
        Tok id = cur_.next();
        if (id.eof()) {
          malformed(t, "vector value without an id");
          return false;
        }
        auto it = id_index_.find(id.text);
        int width = it != id_index_.end() ? vars_[it->second.front()].width : 64;
        Value v;
        if (!vector_value(t, width, v)) return false;
        if (!record_change(id, id.text, v)) return false;
        continue;
      }
      if (c == 'r' || c == 'R') {
        malformed(t, "real values are not supported");
        return false;
      }
      if ((c == '0' || c == '1' || c == 'x' || c == 'X' || c == 'z' || c == 'Z') &&
          t.text.size() >= 2) {
        if (!record_change(t, t.text.substr(1), scalar_value(c))) return false;
        continue;
      }
      malformed(t, "unexpected '" + t.text + "' in value section");
      return false;
    }
  }

  Cursor cur_;
  std::string clock_;
  IngestResult out_;
  std::vector<Var> vars_;
  std::map<std::string, std::size_t> key_index_;
  std::map<std::string, std::vector<std::size_t>> id_index_;
  std::size_t clock_var_ = 0;
  std::string timescale_;
  bool have_time_ = false;
  std::int64_t time_ = 0;
  std::vector<std::pair<std::size_t, Value>> pending_;
  std::vector<std::int64_t> edge_times_;
  std::vector<std::vector<Value>> rows_;
};

}  // namespace

IngestResult ingest_vcd(const std::string& source, const std::string& clock) {
  return VcdParser(source, clock).run();
}

}  // namespace svagen::trace
