#include "bier/render.hpp"

#include <algorithm>
#include <sstream>

namespace bier {

namespace {

std::string join_members(VertexSubset s, const char* sep)
{
    std::string out;
    bool first = true;
    for (int v : s.members()) {
        if (!first) out += sep;
        first = false;
        out += std::to_string(v);
    }
    return out;
}

} // namespace

std::string betti_vector_string(const ReducedBetti& rb)
{
    const auto& v = rb.offset_vector();
    if (v.empty()) return "0";
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += " ";
        out += std::to_string(v[i]);
    }
    return out;
}

std::vector<VertexSubset> canonical_subsets(int m)
{
    std::vector<VertexSubset> out;
    out.reserve(std::size_t(1) << m);
    for (std::uint64_t s = 0; s < (std::uint64_t(1) << m); ++s) out.push_back(VertexSubset(s));
    std::sort(out.begin(), out.end(), canonical_less);
    return out;
}

std::string render_betti_table(const BettiTable& table, OutputFormat fmt)
{
    std::ostringstream os;
    if (fmt == OutputFormat::Csv) {
        os << "i,j,value\n";
        for (const auto& [key, v] : table.entries) os << key.first << "," << key.second << "," << v << "\n";
        return os.str();
    }
    if (fmt == OutputFormat::Json) {
        os << "[";
        bool first = true;
        for (const auto& [key, v] : table.entries) {
            if (!first) os << ",";
            first = false;
            os << "{\"i\":" << key.first << ",\"j\":" << key.second << ",\"value\":" << v << "}";
        }
        os << "]";
        return os.str();
    }
    int max_i = 0, max_j = 0;
    std::size_t width = 1;
    for (const auto& [key, v] : table.entries) {
        max_i = std::max(max_i, key.first);
        max_j = std::max(max_j, key.second);
        width = std::max(width, std::to_string(v).size());
    }
    auto pad = [&](const std::string& s) {
        std::string out = s;
        while (out.size() < width) out.insert(out.begin(), ' ');
        return out;
    };
    os << "i\\j";
    for (int j = 0; j <= max_j; ++j) os << " " << pad(std::to_string(j));
    os << "\n";
    for (int i = 0; i <= max_i; ++i) {
        std::string label = std::to_string(i);
        while (label.size() < 3) label += ' ';
        os << label;
        for (int j = 0; j <= max_j; ++j) {
            const long long v = table.at(i, j);
            os << " " << pad(v == 0 ? "." : std::to_string(v));
        }
        os << "\n";
    }
    return os.str();
}

std::vector<ClassifyRow> all_pairs_classification(const Complex& K)
{
    std::vector<ClassifyRow> rows;
    const std::vector<VertexSubset> subsets = canonical_subsets(K.ground_size());
    rows.reserve(subsets.size() * subsets.size());
    for (VertexSubset I : subsets)
        for (VertexSubset J : subsets) {
            ClassifyRow row;
            row.I = I;
            row.J = J;
            row.cls = classify(K, I, J);
            row.betti = class_reduced_betti(row.cls);
            rows.push_back(std::move(row));
        }
    return rows;
}

namespace {

std::string row_detail(const ClassifyRow& row, const char* facet_sep)
{
    switch (row.cls.tag) {
    case HomotopyTag::CrossPolytopeBoundary:
    case HomotopyTag::SphereCodimTwo: return "r=" + std::to_string(row.cls.sphere_rank);
    case HomotopyTag::Contractible: return "";
    case HomotopyTag::SuspendedLink: {
        std::string out = "k=" + std::to_string(row.cls.suspension_steps) + (row.cls.side == LinkSide::Plain ? " plain" : " barred");
        out += " link=";
        bool first = true;
        for (VertexSubset f : facets(*row.cls.link)) {
            if (!first) out += facet_sep;
            first = false;
            out += join_members(f, " ");
            if (f.empty()) out += "()";
        }
        return out;
    }
    }
    return "";
}

} // namespace

std::string render_classify_rows(const std::vector<ClassifyRow>& rows, int base_m, OutputFormat fmt)
{
    std::ostringstream os;
    if (fmt == OutputFormat::Csv) {
        os << "I,J,tag,detail,betti\n";
        for (const ClassifyRow& row : rows)
            os << join_members(row.I, " ") << "," << join_members(row.J, " ") << "," << row.cls.tag_name() << ","
               << row_detail(row, "|") << "," << betti_vector_string(row.betti) << "\n";
        return os.str();
    }
    for (const ClassifyRow& row : rows) {
        os << format_subset(row.I) << " ⊔ " << format_subset(row.J) << "'  ->  " << row.cls.tag_name();
        const std::string detail = row_detail(row, " | ");
        if (!detail.empty()) os << "  [" << detail << "]";
        os << "  betti(-1..)=" << betti_vector_string(row.betti) << "\n";
    }
    (void)base_m;
    return os.str();
}

} // namespace bier
