#pragma once

#include "isomon/rational.hpp"

#include <string>

namespace isomon {

enum class ChartKind { qp, geometric, lax, isospectral };

std::string to_string(ChartKind k);
ChartKind parse_chart_kind(const std::string& s);

// qp: (q, p); geometric: (Q, P); lax: (Q, R); isospectral: (u, v).
// Polynomial-coefficient charts store index k at position k.
struct DarbouxChart {
  ChartKind kind = ChartKind::qp;
  RVec first, second;

  std::size_t genus() const { return first.size(); }
  void validate() const;
  friend bool operator==(const DarbouxChart&, const DarbouxChart&) = default;
};

inline DarbouxChart qp_chart(RVec q, RVec p) { return {ChartKind::qp, std::move(q), std::move(p)}; }

}  // namespace isomon
