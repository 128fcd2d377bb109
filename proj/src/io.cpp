#include "qubokit/io.hpp"

#include <json.hpp>

#include <cctype>
#include <limits>
#include <set>

namespace qubokit {

namespace {

struct Token {
  std::string_view text;
  int column = 0;  // 1-based byte offset in the line
};

struct ContentLine {
  std::string_view text;
  int number = 0;  // 1-based
  std::vector<Token> tokens;
};

std::vector<Token> split_tokens(std::string_view line) {
  std::vector<Token> tokens;
  std::size_t pos = 0;
  while (pos < line.size()) {
    while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t')) ++pos;
    if (pos >= line.size()) break;
    const std::size_t start = pos;
    while (pos < line.size() && line[pos] != ' ' && line[pos] != '\t') ++pos;
    tokens.push_back({line.substr(start, pos - start), static_cast<int>(start) + 1});
  }
  return tokens;
}

// Walks the input line by line (LF or CRLF), skipping blanks and comment
// lines, and hands out tokenised content lines with positions attached.
class RecordReader {
 public:
  RecordReader(std::string_view text, char comment) : text_(text), comment_(comment) {}

  ContentLine require_line(const std::string& what) {
    auto line = next_content_line();
    if (!line) {
      throw ParseError(line_no_ + 1, 1, "unexpected end of input: expected " + what);
    }
    return *line;
  }

  void require_end() {
    auto line = next_content_line();
    if (line) {
      throw ParseError(line->number, line->tokens.front().column,
                       "unexpected trailing content");
    }
  }

 private:
  std::optional<ContentLine> next_content_line() {
    while (pos_ < text_.size()) {
      const std::size_t nl = text_.find('\n', pos_);
      std::string_view raw = (nl == std::string_view::npos)
                                 ? text_.substr(pos_)
                                 : text_.substr(pos_, nl - pos_);
      pos_ = (nl == std::string_view::npos) ? text_.size() : nl + 1;
      ++line_no_;
      if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
      if (!raw.empty() && raw.front() == comment_) continue;
      auto tokens = split_tokens(raw);
      if (tokens.empty()) continue;
      return ContentLine{raw, line_no_, std::move(tokens)};
    }
    return std::nullopt;
  }

  std::string_view text_;
  char comment_;
  std::size_t pos_ = 0;
  int line_no_ = 0;
};

void expect_token_count(const ContentLine& line, std::size_t count,
                        const std::string& shape) {
  if (line.tokens.size() < count) {
    throw ParseError(line.number, static_cast<int>(line.text.size()) + 1,
                     "expected " + shape);
  }
  if (line.tokens.size() > count) {
    throw ParseError(line.number, line.tokens[count].column, "expected " + shape);
  }
}

void expect_keyword(const ContentLine& line, std::size_t index,
                    std::string_view keyword, const std::string& shape) {
  if (line.tokens[index].text != keyword) {
    throw ParseError(line.number, line.tokens[index].column, "expected " + shape);
  }
}

bool looks_like_integer(std::string_view s) {
  if (s.empty()) return false;
  std::size_t start = (s[0] == '-') ? 1 : 0;
  if (start >= s.size()) return false;
  for (std::size_t i = start; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

Int parse_big(const ContentLine& line, const Token& tok, const std::string& what) {
  if (!looks_like_integer(tok.text)) {
    throw ParseError(line.number, tok.column, what + " must be an integer");
  }
  return Int(std::string(tok.text));
}

long long parse_count(const ContentLine& line, const Token& tok,
                      const std::string& what, long long lo, long long hi) {
  const Int v = parse_big(line, tok, what);
  if (v < lo || v > hi) {
    throw ParseError(line.number, tok.column,
                     what + " must be in [" + std::to_string(lo) + ", " +
                         std::to_string(hi) + "]");
  }
  return to_int64(v);
}

int parse_index(const ContentLine& line, const Token& tok, const std::string& what,
                int n) {
  const Int v = parse_big(line, tok, what);
  if (v < 1 || v > n) {
    throw ParseError(line.number, tok.column,
                     what + " outside [1, " + std::to_string(n) + "]");
  }
  return static_cast<int>(to_int64(v));
}

constexpr long long kMaxDim = 1000000;  // parser sanity cap on counts

}  // namespace

QuboInstance parse_qubo(std::string_view text) {
  RecordReader reader(text, '#');
  const auto head = reader.require_line("`qubo <n> <nnz>` header");
  expect_token_count(head, 3, "`qubo <n> <nnz>` header");
  expect_keyword(head, 0, "qubo", "`qubo <n> <nnz>` header");
  const int n = static_cast<int>(parse_count(head, head.tokens[1], "n", 1, kMaxDim));
  const long long nnz = parse_count(head, head.tokens[2], "nnz", 0, kMaxDim);

  QuboBuilder builder(n);
  std::set<std::pair<int, int>> seen;
  for (long long r = 0; r < nnz; ++r) {
    const auto line = reader.require_line("matrix entry `<i> <j> <coefficient>`");
    expect_token_count(line, 3, "`<i> <j> <coefficient>` entry");
    const int i = parse_index(line, line.tokens[0], "row index", n);
    const int j = parse_index(line, line.tokens[1], "column index", n);
    if (i > j) {
      throw ParseError(line.number, line.tokens[0].column,
                       "lower-triangle entry (i > j)");
    }
    if (!seen.insert({i, j}).second) {
      throw ParseError(line.number, line.tokens[0].column,
                       "duplicate entry (" + std::to_string(i) + ", " +
                           std::to_string(j) + ")");
    }
    const Int coeff = parse_big(line, line.tokens[2], "coefficient");
    if (coeff != 0) builder.add(i, j, coeff);
  }
  reader.require_end();
  return builder.build();
}

std::string write_qubo(const QuboInstance& instance) {
  std::string out = "qubo " + std::to_string(instance.n()) + " " +
                    std::to_string(instance.entries().size()) + "\n";
  for (const auto& [key, v] : instance.entries()) {
    out += std::to_string(key.first) + " " + std::to_string(key.second) + " " +
           to_decimal(v) + "\n";
  }
  return out;
}

Graph parse_graph(std::string_view text) {
  RecordReader reader(text, 'c');
  const auto head = reader.require_line("`p edge <n> <m>` header");
  expect_token_count(head, 4, "`p edge <n> <m>` header");
  expect_keyword(head, 0, "p", "`p edge <n> <m>` header");
  expect_keyword(head, 1, "edge", "`p edge <n> <m>` header");
  const int n = static_cast<int>(parse_count(head, head.tokens[2], "vertex count", 1, kMaxDim));
  const long long m = parse_count(head, head.tokens[3], "edge count", 0, kMaxDim);

  Graph graph;
  graph.n_vertices = n;
  for (long long r = 0; r < m; ++r) {
    const auto line = reader.require_line("edge `e <u> <v>`");
    expect_token_count(line, 3, "`e <u> <v>` edge");
    expect_keyword(line, 0, "e", "`e <u> <v>` edge");
    int u = parse_index(line, line.tokens[1], "vertex", n);
    int v = parse_index(line, line.tokens[2], "vertex", n);
    if (u == v) {
      throw ParseError(line.number, line.tokens[1].column,
                       "self-loop at vertex " + std::to_string(u));
    }
    if (u > v) std::swap(u, v);
    if (!graph.edges.insert({u, v}).second) {
      throw ParseError(line.number, line.tokens[1].column,
                       "duplicate edge (" + std::to_string(u) + ", " +
                           std::to_string(v) + ")");
    }
  }
  reader.require_end();
  return graph;
}

std::string write_graph(const Graph& graph) {
  std::string out = "p edge " + std::to_string(graph.n_vertices) + " " +
                    std::to_string(graph.edges.size()) + "\n";
  for (const auto& [u, v] : graph.edges) {
    out += "e " + std::to_string(u) + " " + std::to_string(v) + "\n";
  }
  return out;
}

IlpInstance parse_ilp(std::string_view text) {
  RecordReader reader(text, '#');
  const auto head = reader.require_line("`ilp <m> <n>` header");
  expect_token_count(head, 3, "`ilp <m> <n>` header");
  expect_keyword(head, 0, "ilp", "`ilp <m> <n>` header");
  const int m = static_cast<int>(parse_count(head, head.tokens[1], "m", 1, kMaxDim));
  const int n = static_cast<int>(parse_count(head, head.tokens[2], "n", 1, kMaxDim));

  IlpInstance ilp;
  ilp.m = m;
  ilp.n = n;
  for (int i = 0; i < m; ++i) {
    const auto line = reader.require_line("constraint row (" + std::to_string(n) +
                                          " coefficients then the bound)");
    expect_token_count(line, static_cast<std::size_t>(n) + 1,
                       "constraint row with " + std::to_string(n + 1) + " integers");
    std::vector<Int> row;
    for (int j = 0; j < n; ++j) {
      row.push_back(parse_big(line, line.tokens[static_cast<std::size_t>(j)],
                              "constraint coefficient"));
    }
    const auto& btok = line.tokens[static_cast<std::size_t>(n)];
    Int bi = parse_big(line, btok, "bound");
    if (bi < 0) {
      throw ParseError(line.number, btok.column, "bound must be >= 0");
    }
    ilp.a.push_back(std::move(row));
    ilp.b.push_back(std::move(bi));
  }

  const auto cline = reader.require_line("objective row (" + std::to_string(n) +
                                         " coefficients)");
  expect_token_count(cline, static_cast<std::size_t>(n),
                     "objective row with " + std::to_string(n) + " integers");
  for (int j = 0; j < n; ++j) {
    ilp.c.push_back(parse_big(cline, cline.tokens[static_cast<std::size_t>(j)],
                              "objective coefficient"));
  }
  reader.require_end();
  return ilp;
}

std::string write_ilp(const IlpInstance& ilp) {
  ilp.validate();
  std::string out = "ilp " + std::to_string(ilp.m) + " " + std::to_string(ilp.n) + "\n";
  for (int i = 0; i < ilp.m; ++i) {
    for (int j = 0; j < ilp.n; ++j) {
      out += to_decimal(ilp.a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]) + " ";
    }
    out += to_decimal(ilp.b[static_cast<std::size_t>(i)]) + "\n";
  }
  for (int j = 0; j < ilp.n; ++j) {
    if (j > 0) out += " ";
    out += to_decimal(ilp.c[static_cast<std::size_t>(j)]);
  }
  out += "\n";
  return out;
}

KnapsackInstance parse_knapsack(std::string_view text) {
  RecordReader reader(text, '#');
  const auto head = reader.require_line("`knapsack <n> <K>` header");
  expect_token_count(head, 3, "`knapsack <n> <K>` header");
  expect_keyword(head, 0, "knapsack", "`knapsack <n> <K>` header");
  const int n = static_cast<int>(parse_count(head, head.tokens[1], "n", 1, kMaxDim));
  const Int capacity = parse_big(head, head.tokens[2], "capacity");
  if (capacity < 1) {
    throw ParseError(head.number, head.tokens[2].column, "capacity must be >= 1");
  }

  const auto line = reader.require_line("item row (" + std::to_string(n) + " sizes)");
  expect_token_count(line, static_cast<std::size_t>(n),
                     "item row with " + std::to_string(n) + " integers");
  KnapsackInstance kp;
  kp.capacity = capacity;
  for (int j = 0; j < n; ++j) {
    const auto& tok = line.tokens[static_cast<std::size_t>(j)];
    Int item = parse_big(line, tok, "item size");
    if (item < 1) {
      throw ParseError(line.number, tok.column, "item size must be positive");
    }
    kp.items.push_back(std::move(item));
  }
  reader.require_end();
  return kp;
}

std::string write_knapsack(const KnapsackInstance& kp) {
  kp.validate();
  std::string out = "knapsack " + std::to_string(kp.items.size()) + " " +
                    to_decimal(kp.capacity) + "\n";
  for (std::size_t j = 0; j < kp.items.size(); ++j) {
    if (j > 0) out += " ";
    out += to_decimal(kp.items[j]);
  }
  out += "\n";
  return out;
}

RationalQubo parse_rqubo(std::string_view text) {
  RecordReader reader(text, '#');
  const auto head = reader.require_line("`rqubo <n> <nnz>` header");
  expect_token_count(head, 3, "`rqubo <n> <nnz>` header");
  expect_keyword(head, 0, "rqubo", "`rqubo <n> <nnz>` header");
  const int n = static_cast<int>(parse_count(head, head.tokens[1], "n", 1, kMaxDim));
  const long long nnz = parse_count(head, head.tokens[2], "nnz", 0, kMaxDim);

  RationalQubo rq;
  rq.n = n;
  for (long long r = 0; r < nnz; ++r) {
    const auto line = reader.require_line("entry `<i> <j> <num> <den>`");
    expect_token_count(line, 4, "`<i> <j> <num> <den>` entry");
    const int i = parse_index(line, line.tokens[0], "row index", n);
    const int j = parse_index(line, line.tokens[1], "column index", n);
    if (i > j) {
      throw ParseError(line.number, line.tokens[0].column,
                       "lower-triangle entry (i > j)");
    }
    const Int num = parse_big(line, line.tokens[2], "numerator");
    const Int den = parse_big(line, line.tokens[3], "denominator");
    if (den < 1) {
      throw ParseError(line.number, line.tokens[3].column,
                       "denominator must be positive");
    }
    if (!rq.entries.emplace(std::make_pair(i, j), std::make_pair(num, den)).second) {
      throw ParseError(line.number, line.tokens[0].column,
                       "duplicate entry (" + std::to_string(i) + ", " +
                           std::to_string(j) + ")");
    }
  }
  reader.require_end();
  return rq;
}

std::string write_rqubo(const RationalQubo& rq) {
  rq.validate();
  std::string out = "rqubo " + std::to_string(rq.n) + " " +
                    std::to_string(rq.entries.size()) + "\n";
  for (const auto& [key, value] : rq.entries) {
    out += std::to_string(key.first) + " " + std::to_string(key.second) + " " +
           to_decimal(value.first) + " " + to_decimal(value.second) + "\n";
  }
  return out;
}

Assignment parse_assignment(std::string_view text, int expected_n) {
  RecordReader reader(text, '#');
  std::vector<std::uint8_t> bits;
  while (static_cast<int>(bits.size()) < expected_n) {
    const auto line = reader.require_line("assignment value (0 or 1)");
    for (const auto& tok : line.tokens) {
      if (static_cast<int>(bits.size()) >= expected_n) {
        throw ParseError(line.number, tok.column,
                         "expected exactly " + std::to_string(expected_n) + " values");
      }
      if (tok.text == "0") {
        bits.push_back(0);
      } else if (tok.text == "1") {
        bits.push_back(1);
      } else {
        throw ParseError(line.number, tok.column, "assignment values must be 0 or 1");
      }
    }
  }
  reader.require_end();
  return Assignment(std::move(bits));
}

ReportDocument make_report_document(int n, const SolveReport& report) {
  ReportDocument doc;
  doc.n = n;
  doc.min_value = report.min_value;
  if (report.argmin) {
    std::vector<int> bits;
    for (int i = 1; i <= report.argmin->size(); ++i) bits.push_back(report.argmin->bit(i));
    doc.argmin = std::move(bits);
  }
  doc.oracle_queries = report.queries;
  doc.search_lo = report.search_interval.first;
  doc.offset_applied = report.offset_applied;
  return doc;
}

namespace {

std::string json_escape(const std::string& s) {
  std::string out;
  for (char ch : s) {
    switch (ch) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      default: out += ch;
    }
  }
  return out;
}

}  // namespace

std::string write_report(const ReportDocument& doc) {
  std::string out = "{\"n\":" + std::to_string(doc.n);
  out += ",\"min_value\":\"" + to_decimal(doc.min_value) + "\"";
  if (doc.argmin) {
    out += ",\"argmin\":[";
    for (std::size_t i = 0; i < doc.argmin->size(); ++i) {
      if (i > 0) out += ",";
      out += std::to_string((*doc.argmin)[i]);
    }
    out += "]";
  }
  out += ",\"oracle_queries\":" + std::to_string(doc.oracle_queries);
  out += ",\"search_lo\":\"" + to_decimal(doc.search_lo) + "\"";
  out += ",\"offset_applied\":\"" + to_decimal(doc.offset_applied) + "\"";
  for (const auto& [key, value] : doc.extras) {
    out += ",\"" + json_escape(key) + "\":\"" + json_escape(value) + "\"";
  }
  out += "}\n";
  return out;
}

ReportDocument read_report(std::string_view text) {
  nlohmann::ordered_json j;
  try {
    j = nlohmann::ordered_json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(1, 1, std::string("invalid report JSON: ") + e.what());
  }
  if (!j.is_object()) throw ParseError(1, 1, "report must be a JSON object");

  const auto decimal_field = [&](const char* key) -> Int {
    if (!j.contains(key) || !j[key].is_string() ||
        !looks_like_integer(j[key].get<std::string>())) {
      throw ParseError(1, 1, std::string("report needs a decimal-string field `") +
                               key + "`");
    }
    return Int(j[key].get<std::string>());
  };

  ReportDocument doc;
  if (!j.contains("n") || !j["n"].is_number_unsigned()) {
    throw ParseError(1, 1, "report needs an unsigned field `n`");
  }
  doc.n = j["n"].get<int>();
  doc.min_value = decimal_field("min_value");
  if (j.contains("argmin")) {
    if (!j["argmin"].is_array()) throw ParseError(1, 1, "`argmin` must be an array");
    std::vector<int> bits;
    for (const auto& item : j["argmin"]) {
      if (!item.is_number_unsigned() || item.get<int>() > 1) {
        throw ParseError(1, 1, "`argmin` entries must be 0 or 1");
      }
      bits.push_back(item.get<int>());
    }
    doc.argmin = std::move(bits);
  }
  if (!j.contains("oracle_queries") || !j["oracle_queries"].is_number_unsigned()) {
    throw ParseError(1, 1, "report needs an unsigned field `oracle_queries`");
  }
  doc.oracle_queries = j["oracle_queries"].get<std::uint64_t>();
  doc.search_lo = decimal_field("search_lo");
  doc.offset_applied = decimal_field("offset_applied");

  static const std::set<std::string> known = {"n",          "min_value",
                                              "argmin",     "oracle_queries",
                                              "search_lo",  "offset_applied"};
  for (auto it = j.begin(); it != j.end(); ++it) {
    if (known.count(it.key()) != 0) continue;
    if (!it.value().is_string()) {
      throw ParseError(1, 1, "extra report field `" + it.key() + "` must be a string");
    }
    doc.extras.emplace_back(it.key(), it.value().get<std::string>());
  }
  return doc;
}

}  // namespace qubokit
