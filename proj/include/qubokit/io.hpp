#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qubokit/bigint.hpp"
#include "qubokit/instance.hpp"
#include "qubokit/reductions.hpp"
#include "qubokit/solvers.hpp"

namespace qubokit {

// Text formats.  Tokens are separated by runs of spaces/tabs; LF and CRLF
// inputs are accepted, writers emit LF.  Every rejection throws ParseError
// with a 1-based line and column.

// "qubo <n> <nnz>" then nnz lines "<i> <j> <coefficient>"; '#' comments.
QuboInstance parse_qubo(std::string_view text);
std::string write_qubo(const QuboInstance& instance);

// "p edge <n> <m>" then m lines "e <u> <v>"; 'c' comments.
Graph parse_graph(std::string_view text);
std::string write_graph(const Graph& graph);

// "ilp <m> <n>" then m rows of n+1 integers (A row, then b_i),
// then one line of n objective coefficients; '#' comments.
IlpInstance parse_ilp(std::string_view text);
std::string write_ilp(const IlpInstance& ilp);

// "knapsack <n> <K>" then one line of n item sizes; '#' comments.
KnapsackInstance parse_knapsack(std::string_view text);
std::string write_knapsack(const KnapsackInstance& kp);

// "rqubo <n> <nnz>" then nnz lines "<i> <j> <num> <den>"; '#' comments.
RationalQubo parse_rqubo(std::string_view text);
std::string write_rqubo(const RationalQubo& rq);

// Whitespace-separated 0/1 tokens, exactly expected_n of them; '#' comments.
Assignment parse_assignment(std::string_view text, int expected_n);

// Single-line JSON result document.  Key order is fixed: n, min_value,
// argmin (only when present), oracle_queries, search_lo, offset_applied,
// then any extras in their stored order.  min_value / search_lo /
// offset_applied render as decimal strings; exactly one trailing newline.
struct ReportDocument {
  int n = 0;
  Int min_value;
  std::optional<std::vector<int>> argmin;
  std::uint64_t oracle_queries = 0;
  Int search_lo;
  Int offset_applied;
  std::vector<std::pair<std::string, std::string>> extras;

  bool operator==(const ReportDocument& o) const {
    return n == o.n && min_value == o.min_value && argmin == o.argmin &&
           oracle_queries == o.oracle_queries && search_lo == o.search_lo &&
           offset_applied == o.offset_applied && extras == o.extras;
  }
};

ReportDocument make_report_document(int n, const SolveReport& report);
std::string write_report(const ReportDocument& doc);
ReportDocument read_report(std::string_view text);

}  // namespace qubokit
