// Command-line front end: parse complexes, dispatch computations, render
// tables and verification reports.
//
// Exit codes: 0 success / verified equality, 1 input or parse error,
// 2 cross-check mismatch, 3 enumeration cap exceeded.

#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "bier/betti.hpp"
#include "bier/bier.hpp"
#include "bier/classify.hpp"
#include "bier/complex.hpp"
#include "bier/corpus.hpp"
#include "bier/homology.hpp"
#include "bier/json_io.hpp"
#include "bier/render.hpp"
#include "bier/toric.hpp"

using namespace bier;

namespace {

struct CommonOpts {
    std::string input;
    std::string format = "table";
    int cap = 18;
    int workers = 0;
};

OutputFormat parse_format(const std::string& f)
{
    if (f == "table") return OutputFormat::Table;
    if (f == "csv") return OutputFormat::Csv;
    if (f == "json") return OutputFormat::Json;
    throw std::invalid_argument("unknown format: " + f);
}

VertexSubset parse_subset(const std::string& text, int m)
{
    if (text.empty() || text == "-" || text == "{}") return VertexSubset();
    std::string cleaned;
    for (char c : text)
        if (c != '{' && c != '}') cleaned += (c == ',' ? ' ' : c);
    std::istringstream is(cleaned);
    std::vector<int> vs;
    int v;
    while (is >> v) {
        if (v < 1 || v > m) throw std::invalid_argument("vertex " + std::to_string(v) + " outside 1.." + std::to_string(m));
        vs.push_back(v);
    }
    if (!is.eof()) throw std::invalid_argument("cannot parse subset: " + text);
    return VertexSubset::of(vs);
}

std::string primed(VertexSubset s, int base_m)
{
    return format_subset(VertexSubset(s.bits() << base_m), base_m);
}

void print_complex(const Complex& K, int base_m, OutputFormat fmt, const std::string& label)
{
    if (fmt == OutputFormat::Json) {
        std::cout << complex_to_json(K) << "\n";
        return;
    }
    if (fmt == OutputFormat::Csv) {
        for (VertexSubset f : K.faces()) {
            bool first = true;
            for (int v : f.members()) {
                if (!first) std::cout << " ";
                first = false;
                std::cout << v;
            }
            std::cout << "\n";
        }
        return;
    }
    std::cout << label << " (ground " << K.ground_size() << ", dim " << K.dim() << ", " << K.face_count()
              << " faces)\n";
    std::cout << "facets:";
    for (VertexSubset f : facets(K)) std::cout << " " << format_subset(f, base_m);
    std::cout << "\n";
}

void add_common(CLI::App* cmd, CommonOpts& opts, bool with_input = true)
{
    if (with_input)
        cmd->add_option("--input,-i", opts.input, "path to a complex JSON file, or inline JSON starting with '{'")
            ->required();
    cmd->add_option("--format,-f", opts.format, "output format: table|csv|json")->default_val("table");
    cmd->add_option("--cap", opts.cap, "brute-force ground-size cap for 2^n sweeps")->default_val(18);
    cmd->add_option("--workers,-w", opts.workers, "worker threads (0 = hardware)")->default_val(0);
}

// All-pairs classifier-vs-oracle plus closed-vs-brute on one complex.
// Returns 0 when everything agrees, 2 on the first mismatch.
int verify_complex(const Complex& K, const EnumerationOptions& opts, bool echo)
{
    const BierComplex B = bier_sphere(K);
    const auto subsets = canonical_subsets(K.ground_size());
    for (VertexSubset I : subsets)
        for (VertexSubset J : subsets) {
            const ReducedBetti lhs = class_reduced_betti(classify(K, I, J));
            const ReducedBetti rhs = reduced_betti_q(bier_full(B, BierIndex{I, J}));
            if (lhs != rhs) {
                std::cout << "MISMATCH classifier-vs-oracle\n";
                std::cout << "  K facets:";
                for (VertexSubset f : facets(K)) std::cout << " " << format_subset(f);
                std::cout << "\n  I=" << format_subset(I) << " J=" << format_subset(J) << "\n";
                std::cout << "  classifier betti: " << betti_vector_string(lhs) << "\n";
                std::cout << "  oracle betti:     " << betti_vector_string(rhs) << "\n";
                return 2;
            }
        }
    const BettiTable closed = bier_betti_closed(K);
    const BettiTable brute = hochster_table(B.complex(), opts);
    if (!(closed == brute)) {
        std::cout << "MISMATCH closed-vs-brute\n  K facets:";
        for (VertexSubset f : facets(K)) std::cout << " " << format_subset(f);
        std::cout << "\n";
        for (const auto& [key, v] : brute.entries)
            if (closed.at(key.first, key.second) != v)
                std::cout << "  first differing entry (i=" << key.first << ", j=" << key.second << "): closed "
                          << closed.at(key.first, key.second) << " vs brute " << v << "\n";
        return 2;
    }
    if (echo) {
        std::cout << "verify OK: " << subsets.size() * subsets.size() << " pairs classified, " << closed.entries.size()
                  << " table entries agree\n";
    }
    return 0;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Bier spheres: full subcomplexes, bigraded Betti tables, real toric invariants.\n"
                 "Barred vertices render as i' in tables and as m+i in CSV/JSON."};
    app.require_subcommand(1);

    CommonOpts dual_o, bier_o, restrict_o, classify_o, homology_o, betti_o, toric_o, hcheck_o, cup_o, verify_o,
        corpus_o;

    auto* cmd_dual = app.add_subcommand("dual", "Alexander dual of the input complex (barred labels rendered i')");
    add_common(cmd_dual, dual_o);

    auto* cmd_bier = app.add_subcommand("bier", "Bier sphere of the input complex");
    add_common(cmd_bier, bier_o);

    auto* cmd_restrict = app.add_subcommand("restrict", "full subcomplex Bier(K)|_{I ⊔ J'}");
    add_common(cmd_restrict, restrict_o);
    std::string restrict_I, restrict_J;
    cmd_restrict->add_option("I", restrict_I, "plain-side subset, e.g. 1,2,4 ('-' for empty)")->required();
    cmd_restrict->add_option("J", restrict_J, "barred-side subset (unbarred labels)")->required();

    auto* cmd_classify = app.add_subcommand("classify", "homotopy type of Bier(K)|_{I ⊔ J'}");
    add_common(cmd_classify, classify_o);
    std::string classify_I, classify_J;
    bool all_pairs = false;
    cmd_classify->add_option("I", classify_I, "plain-side subset");
    cmd_classify->add_option("J", classify_J, "barred-side subset");
    cmd_classify->add_flag("--all-pairs", all_pairs, "classify every (I,J) pair in canonical order");

    auto* cmd_homology = app.add_subcommand("homology", "reduced rational Betti numbers and integral torsion");
    add_common(cmd_homology, homology_o);

    auto* cmd_betti = app.add_subcommand(
        "betti", "bigraded Betti table of Bier(K) (rational ranks; integral torsion shows up under 'homology' only)");
    add_common(cmd_betti, betti_o);
    std::string method = "both";
    cmd_betti->add_option("--method,-m", method, "closed|brute|both")->default_val("both");

    auto* cmd_toric = app.add_subcommand("toric", "Betti numbers and generators of the real toric manifold over Bier(K)");
    add_common(cmd_toric, toric_o);

    auto* cmd_hcheck = app.add_subcommand("hcheck", "h-vector corollary check h_2k - h_2k-1 = β^2k - β^2k-1");
    add_common(cmd_hcheck, hcheck_o);

    auto* cmd_cup = app.add_subcommand("cup", "cup product Φ(I) ⌣ Φ(J)");
    add_common(cmd_cup, cup_o);
    std::string cup_I, cup_J;
    cmd_cup->add_option("I", cup_I)->required();
    cmd_cup->add_option("J", cup_J)->required();

    auto* cmd_verify = app.add_subcommand("verify", "all-pairs classifier-vs-oracle and closed-vs-brute on one input");
    add_common(cmd_verify, verify_o);

    auto* cmd_corpus = app.add_subcommand("corpus-verify", "randomized verification sweep");
    add_common(cmd_corpus, corpus_o, false);
    int corpus_m = 5, corpus_count = 50;
    std::uint64_t corpus_seed = 1;
    cmd_corpus->add_option("--m", corpus_m, "ground size of random complexes")->default_val(5);
    cmd_corpus->add_option("--count", corpus_count, "number of random complexes")->default_val(50);
    cmd_corpus->add_option("--seed", corpus_seed, "RNG seed (fully determines the corpus)")->default_val(1);

    CLI11_PARSE(app, argc, argv);

    try {
        if (*cmd_dual) {
            const Complex K = load_complex(dual_o.input);
            const Complex D = alexander_dual(K);
            const OutputFormat fmt = parse_format(dual_o.format);
            if (fmt == OutputFormat::Table) {
                std::cout << "dual of K on ground " << K.ground_size() << "\nfacets:";
                for (VertexSubset f : facets(D)) std::cout << " " << primed(f, K.ground_size());
                std::cout << "\n";
            } else {
                print_complex(D, 0, fmt, "");
            }
        } else if (*cmd_bier) {
            const Complex K = load_complex(bier_o.input);
            const BierComplex B = bier_sphere(K);
            const OutputFormat fmt = parse_format(bier_o.format);
            if (fmt == OutputFormat::Json)
                std::cout << bier_to_json(B) << "\n";
            else
                print_complex(B.complex(), B.base_m(), fmt, "Bier(K)");
        } else if (*cmd_restrict) {
            const Complex K = load_complex(restrict_o.input);
            const BierComplex B = bier_sphere(K);
            const BierIndex idx{parse_subset(restrict_I, K.ground_size()), parse_subset(restrict_J, K.ground_size())};
            print_complex(bier_full(B, idx), B.base_m(), parse_format(restrict_o.format),
                          "Bier(K)|_{" + format_subset(idx.I) + " ⊔ " + format_subset(idx.J) + "'}");
        } else if (*cmd_classify) {
            const Complex K = load_complex(classify_o.input);
            const OutputFormat fmt = parse_format(classify_o.format);
            std::vector<ClassifyRow> rows;
            if (all_pairs) {
                rows = all_pairs_classification(K);
            } else {
                if (cmd_classify->count("I") != 1 || cmd_classify->count("J") != 1)
                    throw std::invalid_argument("classify needs both I and J ('-' for empty), or --all-pairs");
                ClassifyRow row;
                row.I = parse_subset(classify_I, K.ground_size());
                row.J = parse_subset(classify_J, K.ground_size());
                row.cls = classify(K, row.I, row.J);
                row.betti = class_reduced_betti(row.cls);
                rows.push_back(std::move(row));
            }
            std::cout << render_classify_rows(rows, K.ground_size(), fmt);
        } else if (*cmd_homology) {
            const Complex K = load_complex(homology_o.input);
            const HomologyResult H = integral_homology(K);
            const OutputFormat fmt = parse_format(homology_o.format);
            if (fmt == OutputFormat::Json) {
                std::cout << "{\"start_degree\":-1,\"reduced_betti\":[";
                const auto& v = H.reduced_betti.offset_vector();
                for (std::size_t i = 0; i < v.size(); ++i) std::cout << (i ? "," : "") << v[i];
                std::cout << "],\"torsion\":[";
                for (std::size_t i = 0; i < H.torsion.size(); ++i)
                    std::cout << (i ? "," : "") << "{\"degree\":" << H.torsion[i].degree
                              << ",\"order\":" << H.torsion[i].order << "}";
                std::cout << "]}\n";
            } else if (fmt == OutputFormat::Csv) {
                const auto& v = H.reduced_betti.offset_vector();
                for (std::size_t i = 0; i < v.size(); ++i)
                    std::cout << "betti," << static_cast<int>(i) - 1 << "," << v[i] << "\n";
                for (const TorsionEntry& t : H.torsion) std::cout << "torsion," << t.degree << "," << t.order << "\n";
            } else {
                std::cout << "reduced betti (deg -1..): " << betti_vector_string(H.reduced_betti) << "\n";
                if (H.torsion.empty()) {
                    std::cout << "torsion: none\n";
                } else {
                    std::cout << "torsion:";
                    for (const TorsionEntry& t : H.torsion) std::cout << " H~_" << t.degree << ": Z/" << t.order;
                    std::cout << "\n";
                }
            }
        } else if (*cmd_betti) {
            const Complex K = load_complex(betti_o.input);
            const OutputFormat fmt = parse_format(betti_o.format);
            const EnumerationOptions opts{betti_o.cap, betti_o.workers};
            if (method != "closed" && method != "brute" && method != "both")
                throw std::invalid_argument("unknown method: " + method);
            std::optional<BettiTable> closed, brute;
            if (method != "brute") closed = bier_betti_closed(K);
            if (method != "closed") brute = hochster_table(bier_sphere(K).complex(), opts);
            if (closed) {
                if (fmt == OutputFormat::Table && method == "both") std::cout << "closed form:\n";
                std::cout << render_betti_table(*closed, fmt) << (fmt == OutputFormat::Json ? "\n" : "");
            }
            if (brute) {
                if (fmt == OutputFormat::Table && method == "both") std::cout << "brute force (Hochster):\n";
                std::cout << render_betti_table(*brute, fmt) << (fmt == OutputFormat::Json ? "\n" : "");
            }
            if (closed && brute) {
                if (*closed == *brute) {
                    std::cout << "verdict: OK (closed == brute)\n";
                } else {
                    std::cout << "verdict: MISMATCH\n";
                    for (const auto& [key, v] : brute->entries)
                        if (closed->at(key.first, key.second) != v) {
                            std::cout << "first differing entry (i=" << key.first << ", j=" << key.second
                                      << "): closed " << closed->at(key.first, key.second) << " vs brute " << v << "\n";
                            break;
                        }
                    return 2;
                }
            }
        } else if (*cmd_toric) {
            const Complex K = load_complex(toric_o.input);
            const OutputFormat fmt = parse_format(toric_o.format);
            const std::vector<long long> beta = toric_betti(K);
            if (fmt == OutputFormat::Csv) {
                for (std::size_t i = 0; i < beta.size(); ++i) std::cout << "beta," << i << "," << beta[i] << "\n";
                for (const auto& [deg, members] : i_collections(K).by_degree)
                    for (VertexSubset I : members) {
                        std::cout << "collection," << deg << ",";
                        bool first = true;
                        for (int v : I.members()) {
                            if (!first) std::cout << " ";
                            first = false;
                            std::cout << v;
                        }
                        std::cout << "\n";
                    }
            } else if (fmt == OutputFormat::Json) {
                std::cout << "{\"betti\":[";
                for (std::size_t i = 0; i < beta.size(); ++i) std::cout << (i ? "," : "") << beta[i];
                std::cout << "]}\n";
            } else {
                for (std::size_t i = 0; i < beta.size(); ++i) std::cout << (i ? " " : "") << beta[i];
                std::cout << "\n";
                for (const auto& [deg, members] : i_collections(K).by_degree) {
                    std::cout << "I_" << deg << " (" << members.size() << "):";
                    for (VertexSubset I : members) std::cout << " " << format_subset(I);
                    std::cout << "\n";
                }
                if (K.ground_size() <= toric_o.cap) {
                    const ConcentrationReport rep = toric_concentration(K, {toric_o.cap, toric_o.workers});
                    std::cout << "concentration certificate: " << (rep.ok ? "verified" : "FAILED") << " over "
                              << rep.rows.size() << " even subsets\n";
                    if (!rep.ok) return 2;
                }
            }
        } else if (*cmd_hcheck) {
            const Complex K = load_complex(hcheck_o.input);
            const HCorollaryReport rep = h_corollary_check(K);
            const OutputFormat fmt = parse_format(hcheck_o.format);
            if (fmt == OutputFormat::Csv) {
                std::cout << "k,h_2k,h_2k-1,beta_2k,beta_2k-1,equal\n";
                for (const HCorollaryRow& row : rep.rows)
                    std::cout << row.k << "," << row.h_even << "," << row.h_odd << "," << row.beta_even << ","
                              << row.beta_odd << "," << (row.equal ? 1 : 0) << "\n";
            } else {
                std::cout << "h(Bier(K)) with r=" << rep.h.r << ":";
                for (long long h : rep.h.h) std::cout << " " << h;
                std::cout << "\nbeta(M^R):";
                for (long long b : rep.beta) std::cout << " " << b;
                std::cout << "\n";
                for (const HCorollaryRow& row : rep.rows)
                    std::cout << "k=" << row.k << ": h_" << 2 * row.k << " - h_" << 2 * row.k - 1 << " = "
                              << row.h_even - row.h_odd << "  vs  " << row.beta_even - row.beta_odd << "  "
                              << (row.equal ? "ok" : "MISMATCH") << "\n";
                std::cout << (rep.pass ? "PASS" : "FAIL") << "\n";
            }
            if (!rep.pass) return 2;
        } else if (*cmd_cup) {
            const Complex K = load_complex(cup_o.input);
            const VertexSubset I = parse_subset(cup_I, K.ground_size());
            const VertexSubset J = parse_subset(cup_J, K.ground_size());
            const ProductResult r = cup_product(K, I, J);
            const OutputFormat fmt = parse_format(cup_o.format);
            if (fmt == OutputFormat::Csv) {
                std::cout << "tag,subset\n";
                switch (r.tag) {
                case ProductResult::Tag::Zero: std::cout << "zero,\n"; break;
                case ProductResult::Tag::GeneratorUpToSign: {
                    std::cout << "generator-up-to-sign,";
                    bool first = true;
                    for (int v : r.subset.members()) {
                        if (!first) std::cout << " ";
                        first = false;
                        std::cout << v;
                    }
                    std::cout << "\n";
                    break;
                }
                case ProductResult::Tag::Undetermined: std::cout << "undetermined,\n"; break;
                }
            } else {
                switch (r.tag) {
                case ProductResult::Tag::Zero: std::cout << "zero\n"; break;
                case ProductResult::Tag::GeneratorUpToSign:
                    std::cout << "generator up to sign: " << format_subset(r.subset) << "\n";
                    break;
                case ProductResult::Tag::Undetermined: std::cout << "undetermined (conjecture territory)\n"; break;
                }
            }
        } else if (*cmd_verify) {
            const Complex K = load_complex(verify_o.input);
            return verify_complex(K, {verify_o.cap, verify_o.workers}, true);
        } else if (*cmd_corpus) {
            RandomComplexSource src(corpus_m, corpus_seed);
            for (int i = 0; i < corpus_count; ++i) {
                const Complex K = src.next();
                const int rc = verify_complex(K, {corpus_o.cap, corpus_o.workers}, false);
                if (rc != 0) {
                    std::cout << "corpus-verify FAILED at index " << i << " (m=" << corpus_m << ", seed=" << corpus_seed
                              << ")\n";
                    return rc;
                }
                std::cout << "ok " << i << " faces=" << K.face_count() << "\n";
            }
            std::cout << "corpus-verify OK: " << corpus_count << " complexes on m=" << corpus_m
                      << " (seed=" << corpus_seed << ")\n";
        }
    } catch (const CapExceededError& e) {
        std::cerr << "cap exceeded: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
