#ifndef BIER_RENDER_HPP
#define BIER_RENDER_HPP

#include <string>
#include <vector>

#include "bier/betti.hpp"
#include "bier/classify.hpp"

namespace bier {

enum class OutputFormat { Table, Csv, Json };

/// Betti table in the row-i/column-j layout with dots for zeros, or as
/// (i,j,value) CSV triples, or as a JSON entry list.
std::string render_betti_table(const BettiTable& table, OutputFormat fmt);

struct ClassifyRow {
    VertexSubset I, J;
    HomotopyClass cls;
    ReducedBetti betti;
};

/// Classification of every (I, J) pair in canonical pair order.
std::vector<ClassifyRow> all_pairs_classification(const Complex& K);

std::string render_classify_rows(const std::vector<ClassifyRow>& rows, int base_m, OutputFormat fmt);

/// Space-joined reduced Betti ranks from degree -1 upward ("0" when zero).
std::string betti_vector_string(const ReducedBetti& rb);

/// All subsets of {1..m} in canonical order.
std::vector<VertexSubset> canonical_subsets(int m);

} // namespace bier

#endif
