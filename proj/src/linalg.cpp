#include "macfrob/linalg.hpp"

#include "macfrob/field.hpp"

namespace macfrob {

std::size_t integer_matrix_rank(const std::vector<std::vector<std::int64_t>>& rows) {
  RationalField q;
  MatrixRows<RationalField> m;
  m.reserve(rows.size());
  for (const auto& row : rows) {
    std::vector<RationalField::Elem> r;
    r.reserve(row.size());
    for (std::int64_t v : row) r.emplace_back(v);
    m.push_back(std::move(r));
  }
  return reduced_row_echelon(q, m);
}

}  // namespace macfrob
