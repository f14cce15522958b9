#include "lrb/io.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"

namespace lrb {

namespace {

std::vector<std::string> split_ws(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

std::variant<BandDocument, std::vector<ParseError>> parse_json_document(std::string_view text) {
  std::vector<ParseError> errors;
  nlohmann::json j = nlohmann::json::parse(text, nullptr, false);
  if (j.is_discarded() || !j.is_object()) {
    errors.push_back({1, 1, "malformed JSON band document"});
    return errors;
  }
  BandDocument doc;
  if (!j.contains("elements") || !j["elements"].is_array()) {
    errors.push_back({1, 1, "missing \"elements\" array"});
    return errors;
  }
  for (const auto& e : j["elements"]) doc.labels.push_back(e.get<std::string>());
  doc.identity = j.value("identity", std::string("auto"));
  if (!j.contains("table") || !j["table"].is_array()) {
    errors.push_back({1, 1, "missing \"table\" array"});
    return errors;
  }
  for (const auto& row : j["table"]) {
    doc.table.emplace_back();
    for (const auto& cell : row) doc.table.back().push_back(cell.get<std::string>());
  }
  if (j.contains("metadata"))
    for (auto it = j["metadata"].begin(); it != j["metadata"].end(); ++it)
      doc.metadata[it.key()] = it.value().is_string() ? it.value().get<std::string>()
                                                      : it.value().dump();
  return doc;
}

}  // namespace

std::variant<BandDocument, std::vector<ParseError>> parse_band_document(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') return parse_json_document(text);

  BandDocument doc;
  std::vector<ParseError> errors;
  std::istringstream in{std::string(text)};
  std::string raw;
  int lineno = 0;
  bool have_elements = false;
  std::vector<std::pair<int, std::string>> rows;  // (line, content)
  while (std::getline(in, raw)) {
    ++lineno;
    const auto hash = raw.find('#');
    std::string line = hash == std::string::npos ? raw : raw.substr(0, hash);
    if (split_ws(line).empty()) continue;
    const auto colon = line.find(':');
    std::string head = colon == std::string::npos ? "" : line.substr(0, colon);
    head.erase(std::remove_if(head.begin(), head.end(), ::isspace), head.end());
    if (colon != std::string::npos && (head == "elements" || head == "identity")) {
      const std::string rest = line.substr(colon + 1);
      if (head == "elements") {
        doc.labels = split_ws(rest);
        have_elements = true;
        if (doc.labels.empty()) errors.push_back({lineno, 1, "empty elements list"});
      } else {
        auto toks = split_ws(rest);
        if (toks.size() != 1)
          errors.push_back({lineno, 1, "identity wants exactly one label or \"auto\""});
        else
          doc.identity = toks[0];
      }
      continue;
    }
    rows.emplace_back(lineno, line);
  }
  if (!have_elements) errors.push_back({1, 1, "missing \"elements:\" line"});
  if (!errors.empty()) return errors;

  std::vector<std::string> sorted = doc.labels;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    errors.push_back({1, 1, "duplicate element label"});
  for (const auto& l : doc.labels)
    if (l.find(':') != std::string::npos)
      errors.push_back({1, 1, "label contains ':': " + l});

  const std::size_t n = doc.labels.size();
  if (rows.size() != n)
    errors.push_back({rows.empty() ? 1 : rows.back().first, 1,
                      "expected " + std::to_string(n) + " table rows, found " +
                          std::to_string(rows.size())});
  for (const auto& [ln, content] : rows) {
    auto cells = split_ws(content);
    if (cells.size() != n) {
      errors.push_back({ln, 1,
                        "ragged table row: expected " + std::to_string(n) + " entries, found " +
                            std::to_string(cells.size())});
      continue;
    }
    int col = 1;
    for (const auto& c : cells) {
      if (std::find(doc.labels.begin(), doc.labels.end(), c) == doc.labels.end())
        errors.push_back({ln, col, "unknown label \"" + c + "\""});
      ++col;
    }
    doc.table.push_back(std::move(cells));
  }
  if (!errors.empty()) return errors;
  if (doc.identity != "auto" &&
      std::find(doc.labels.begin(), doc.labels.end(), doc.identity) == doc.labels.end())
    errors.push_back({1, 1, "identity label \"" + doc.identity + "\" not declared"});
  if (!errors.empty()) return errors;
  return doc;
}

std::string serialize_band_document(const BandDocument& doc) {
  std::ostringstream out;
  out << "elements:";
  for (const auto& l : doc.labels) out << ' ' << l;
  out << "\nidentity: " << doc.identity << '\n';
  for (const auto& row : doc.table) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? " " : "") << row[i];
    out << '\n';
  }
  return out.str();
}

std::variant<RealizedTable, std::vector<ParseError>> realize(const BandDocument& doc) {
  std::vector<ParseError> errors;
  const int k = static_cast<int>(doc.labels.size());
  auto index_of = [&](const std::string& l) {
    return static_cast<int>(std::find(doc.labels.begin(), doc.labels.end(), l) -
                            doc.labels.begin());
  };
  if (static_cast<int>(doc.table.size()) != k) {
    errors.push_back({1, 1, "table size disagrees with element count"});
    return errors;
  }
  RealizedTable out;
  if (doc.identity == "auto") {
    out.adjoined = true;
    out.n = k + 1;
    out.identity = 0;
    std::string e = "e";
    while (std::find(doc.labels.begin(), doc.labels.end(), e) != doc.labels.end()) e += "_";
    out.labels.push_back(e);
    out.labels.insert(out.labels.end(), doc.labels.begin(), doc.labels.end());
    out.table.assign(static_cast<std::size_t>(out.n) * out.n, 0);
    for (int x = 0; x < out.n; ++x) {
      out.table[static_cast<std::size_t>(x)] = x;                              // e . x
      out.table[static_cast<std::size_t>(x) * out.n] = x;                      // x . e
    }
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j)
        out.table[static_cast<std::size_t>(i + 1) * out.n + (j + 1)] =
            index_of(doc.table[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]) + 1;
  } else {
    out.n = k;
    out.identity = index_of(doc.identity);
    out.labels = doc.labels;
    out.table.resize(static_cast<std::size_t>(k) * k);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j)
        out.table[static_cast<std::size_t>(i) * k + j] =
            index_of(doc.table[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
  }
  return out;
}

std::string word_to_string(const FreeWord& w, const AlphabetRegistry& reg,
                           const std::vector<std::string>* labels) {
  std::ostringstream out;
  bool first = true;
  for (LetterId a : w.letters) {
    if (!first) out << ' ';
    first = false;
    const Letter& l = reg.letter(a);
    if (l.kind == Letter::Kind::Base) {
      out << 'a' << l.gen;
    } else {
      auto name = [&](int idx) {
        if (idx == Letter::kEmptyTag) return std::string("-");
        if (labels && idx >= 0 && idx < static_cast<int>(labels->size()))
          return (*labels)[static_cast<std::size_t>(idx)];
        return std::to_string(idx);
      };
      out << "t:" << name(l.owner) << ':' << name(l.tag) << ':' << l.round;
    }
  }
  return out.str();
}

std::optional<FreeWord> word_from_string(std::string_view text, AlphabetRegistry& reg,
                                         const std::vector<std::string>& labels) {
  auto label_index = [&](const std::string& l) -> int {
    if (l == "-") return Letter::kEmptyTag;
    auto it = std::find(labels.begin(), labels.end(), l);
    return it == labels.end() ? -2 : static_cast<int>(it - labels.begin());
  };
  FreeWord w;
  for (const std::string& tok : split_ws(std::string(text))) {
    if (tok.size() > 1 && tok[0] == 'a' &&
        std::all_of(tok.begin() + 1, tok.end(), [](char c) { return ::isdigit(c); })) {
      try {
        w.letters.push_back(reg.base(std::stoi(tok.substr(1))));
      } catch (...) {
        return std::nullopt;
      }
      continue;
    }
    if (tok.rfind("t:", 0) == 0) {
      std::vector<std::string> parts;
      std::string cur;
      for (char c : tok) {
        if (c == ':') {
          parts.push_back(cur);
          cur.clear();
        } else {
          cur += c;
        }
      }
      parts.push_back(cur);
      if (parts.size() != 4) return std::nullopt;
      const int owner = label_index(parts[1]);
      const int tag = label_index(parts[2]);
      if (owner < 0 || tag == -2) return std::nullopt;
      int round = 0;
      try {
        round = std::stoi(parts[3]);
      } catch (...) {
        return std::nullopt;
      }
      w.letters.push_back(reg.fresh(owner, tag, round));
      continue;
    }
    return std::nullopt;
  }
  for (std::size_t i = 0; i < w.letters.size(); ++i)
    for (std::size_t j = i + 1; j < w.letters.size(); ++j)
      if (w.letters[i] == w.letters[j]) return std::nullopt;
  return w;
}

}  // namespace lrb
