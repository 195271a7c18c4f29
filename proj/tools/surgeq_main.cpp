// Command-line front end: invariants, compare, expand, lens, milnor, orbit,
// nilpotent-ranks.  All I/O is UTF-8 JSON; rationals are exact strings.
//
// Exit codes: 0 Equivalent, 1 NotEquivalent, 4 Unknown, 2 parse error,
// 3 precondition failure.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "surgeq/io.hpp"
#include "surgeq/milnor.hpp"
#include "surgeq/verdict.hpp"

using nlohmann::json;
using namespace surgeq;

namespace {

constexpr int kExitEquivalent = 0;
constexpr int kExitNotEquivalent = 1;
constexpr int kExitParse = 2;
constexpr int kExitPrecondition = 3;
constexpr int kExitUnknown = 4;

int verdict_exit(const Verdict& v) {
    switch (v.status) {
        case VerdictStatus::Equivalent: return kExitEquivalent;
        case VerdictStatus::NotEquivalent: return kExitNotEquivalent;
        default: return kExitUnknown;
    }
}

std::vector<int> parse_index(const std::string& s) {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            out.push_back(std::stoi(tok));
        } catch (...) {
            throw ParseError("bad index list: " + s);
        }
    }
    if (out.empty()) throw ParseError("bad index list: " + s);
    return out;
}

// Table-driven report: one Magnus expansion per longitude, Delta moduli from
// coefficient lookups.
json mu_report(const FramedLink& link, int max_length) {
    std::vector<FreeWord> longs = link_longitudes(link);
    std::vector<MagnusSeries> expanded;
    for (const FreeWord& ell : longs) expanded.push_back(magnus_expand(ell, std::max(1, max_length - 1)));
    auto raw = [&](const std::vector<int>& idx) {
        std::vector<int> mono(idx.begin(), idx.end() - 1);
        return expanded[static_cast<std::size_t>(idx.back()) - 1].coefficient(mono);
    };
    auto gcd_int = [](Int a, const Int& b) {
        mpz_gcd(a.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
        return a;
    };

    const int m = static_cast<int>(link.components());
    json arr = json::array();
    for (int r = 2; r <= max_length; ++r) {
        std::vector<int> idx(static_cast<std::size_t>(r), 1);
        for (;;) {
            Int value = raw(idx);
            Int delta = 0;
            for (unsigned mask = 1; mask + 1 < (1u << r); ++mask) {
                std::vector<int> sub;
                for (int i = 0; i < r; ++i)
                    if (mask & (1u << i)) sub.push_back(idx[static_cast<std::size_t>(i)]);
                if (sub.size() < 2) continue;
                for (std::size_t k = 0; k < sub.size(); ++k) {
                    std::rotate(sub.begin(), sub.begin() + 1, sub.end());
                    delta = gcd_int(delta, raw(sub));
                }
            }
            if (delta > 0) mpz_fdiv_r(value.get_mpz_t(), value.get_mpz_t(), delta.get_mpz_t());
            if (value != 0 || raw(idx) != 0) {
                json item;
                item["index"] = idx;
                item["value"] = value.get_str();
                item["modulus"] = delta.get_str();
                arr.push_back(std::move(item));
            }
            int pos = r - 1;
            while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == m) idx[static_cast<std::size_t>(pos--)] = 1;
            if (pos < 0) break;
            ++idx[static_cast<std::size_t>(pos)];
        }
    }
    return arr;
}

int cmd_invariants(const std::string& file, int max_length) {
    FramedLink link = load_link(file);
    json report;
    FramedLink expanded = expand_to_integral(link);
    IntMatrix v = presentation_matrix(expanded);
    report["h1"] = homology_to_json(first_homology(v));
    report["linking_form"] = linking_form_to_json(linking_form(v));
    if (link.zero_framed_unlinked() && (link.longitudes || link.braid))
        report["trilinear"] = trilinear_to_json(from_mu_triple(link));
    if (link.longitudes || link.braid) report["mu"] = mu_report(link, max_length);
    std::cout << report.dump(1) << "\n";
    return 0;
}

// The k-relation is decided against #^m S^1 x S^2, so a pairwise comparison
// goes through the standard manifold: when one side is k-equivalent to it,
// transitivity settles the pair; when both sides differ from it, the
// classification gives no verdict.
Verdict compare_k(const FramedLink& a, const FramedLink& b, int k) {
    Verdict va = k_equiv_to_standard(a, k);
    Verdict vb = k_equiv_to_standard(b, k);
    if (a.components() != b.components()) {
        Verdict v;
        v.relation = va.relation;
        v.status = VerdictStatus::NotEquivalent;
        v.rule = "first homology differs";
        v.certificate.push_back({"rank of H1", std::to_string(a.components()), std::to_string(b.components())});
        return v;
    }
    if (vb.status == VerdictStatus::Equivalent) {
        va.notes = "second input is k-equivalent to the standard manifold; verdict is the first input's";
        return va;
    }
    if (va.status == VerdictStatus::Equivalent) {
        Verdict v = vb;
        std::swap(v.certificate.front().value_a, v.certificate.front().value_b);
        v.notes = "first input is k-equivalent to the standard manifold; verdict is the second input's";
        return v;
    }
    Verdict v;
    v.relation = va.relation;
    v.status = VerdictStatus::Unknown;
    v.rule = "both inputs differ from the standard manifold";
    v.notes = "the k-relation is only classified against #^m S^1 x S^2";
    v.certificate = va.certificate;
    for (const auto& e : vb.certificate) v.certificate.push_back(e);
    return v;
}

int cmd_compare(const std::string& file_a, const std::string& file_b, const std::string& relation, int depth,
                const Int& bound, bool certificate) {
    FramedLink a = load_link(file_a);
    FramedLink b = load_link(file_b);
    Verdict v;
    if (relation == "integral2") {
        v = compare_integral_2(a, b, depth, bound);
    } else if (relation == "rational2") {
        v = compare_rational_2(a, b, depth);
    } else if (relation.rfind("k=", 0) == 0) {
        int k = 0;
        try {
            k = std::stoi(relation.substr(2));
        } catch (...) {
            throw ParseError("bad relation: " + relation);
        }
        v = compare_k(a, b, k);
    } else {
        throw ParseError("unknown relation: " + relation + " (use integral2, rational2 or k=K)");
    }
    std::cout << verdict_to_json(v, certificate).dump(1) << "\n";
    return verdict_exit(v);
}

int cmd_expand(const std::string& file) {
    FramedLink link = load_link(file);
    std::cout << link_to_json(expand_to_integral(link)).dump(1) << "\n";
    return 0;
}

int cmd_lens(const std::string& n, const std::string& q, const std::string& n2, const std::string& q2,
             bool certificate) {
    Verdict v;
    try {
        v = lens_compare(Int(n), Int(q), Int(n2), Int(q2));
    } catch (const std::invalid_argument&) {
        throw ParseError("lens parameters must be integers");
    }
    std::cout << verdict_to_json(v, certificate).dump(1) << "\n";
    return verdict_exit(v);
}

int cmd_milnor(const std::string& file, const std::string& index, int max_length) {
    FramedLink link = load_link(file);
    if (!index.empty()) {
        MuInvariant mu = mu_bar(link, parse_index(index));
        json j;
        j["index"] = mu.index;
        j["value"] = mu.value.get_str();
        j["modulus"] = mu.modulus.get_str();
        std::cout << j.dump(1) << "\n";
        return 0;
    }
    std::cout << mu_report(link, max_length).dump(1) << "\n";
    return 0;
}

int cmd_orbit(const std::string& file) {
    std::ifstream in(file);
    if (!in) throw ParseError("cannot open " + file);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw ParseError("cannot parse " + file + ": " + e.what());
    }
    TrilinearForm f;
    if (j.contains("components"))
        f = from_mu_triple(link_from_json(j));
    else
        f = trilinear_from_json(j);
    OrbitInvariants inv = orbit_invariants(f);
    json out;
    out["m"] = inv.m;
    out["content"] = inv.content.get_str();
    json cf = json::array();
    for (const Int& d : inv.contraction_factors) cf.push_back(d.get_str());
    out["contraction_factors"] = std::move(cf);
    out["form"] = trilinear_to_json(f);
    std::cout << out.dump(1) << "\n";
    return 0;
}

int cmd_nilpotent_ranks(int m, int k) {
    json j;
    j["m"] = m;
    j["k"] = k;
    j["rank"] = free_nilpotent_h3_rank(m, k).get_str();
    std::cout << j.dump(1) << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"surgery-presentation invariants and equivalence verdicts for 3-manifolds"};
    app.require_subcommand(1);

    std::string file_a, file_b, relation = "integral2", index;
    std::string lens_n, lens_q, lens_n2, lens_q2;
    int max_length = 4, depth = 12, ranks_m = 0, ranks_k = 0;
    std::string bound_str = "10000";
    bool certificate = false;

    CLI::App* inv = app.add_subcommand("invariants", "H1, linking form, cup form and mu-bar table of a presentation");
    inv->add_option("file", file_a)->required();
    inv->add_option("--max-length", max_length, "largest mu-bar length to tabulate");

    CLI::App* cmp = app.add_subcommand("compare", "decide a surgery equivalence relation for two presentations");
    cmp->add_option("fileA", file_a)->required();
    cmp->add_option("fileB", file_b)->required();
    cmp->add_option("--relation", relation, "integral2 | rational2 | k=K");
    cmp->add_option("--depth", depth, "orbit search depth");
    cmp->add_option("--bound", bound_str, "brute-force bound for torsion order");
    cmp->add_flag("--certificate", certificate, "print full invariant values");

    CLI::App* exp = app.add_subcommand("expand", "rewrite a presentation with integral framings only");
    exp->add_option("file", file_a)->required();

    CLI::App* lens = app.add_subcommand("lens", "compare the lens spaces L(n,q) and L(n',q')");
    lens->add_option("n", lens_n)->required();
    lens->add_option("q", lens_q)->required();
    lens->add_option("n2", lens_n2)->required();
    lens->add_option("q2", lens_q2)->required();
    lens->add_flag("--certificate", certificate, "print full invariant values");

    CLI::App* mil = app.add_subcommand("milnor", "mu-bar invariants of a presentation");
    mil->add_option("file", file_a)->required();
    mil->add_option("--index", index, "comma-separated index sequence, e.g. 1,1,2,2");
    mil->add_option("--max-length", max_length, "largest length to tabulate when no index is given");

    CLI::App* orb = app.add_subcommand("orbit", "orbit invariants of a trilinear form (literal or presentation)");
    orb->add_option("file", file_a)->required();

    CLI::App* nil = app.add_subcommand("nilpotent-ranks", "rank of H3 of the free nilpotent group on m generators");
    nil->add_option("m", ranks_m)->required();
    nil->add_option("k", ranks_k)->required();

    CLI11_PARSE(app, argc, argv);

    try {
        Int bound(bound_str);
        if (inv->parsed()) return cmd_invariants(file_a, max_length);
        if (cmp->parsed()) return cmd_compare(file_a, file_b, relation, depth, bound, certificate);
        if (exp->parsed()) return cmd_expand(file_a);
        if (lens->parsed()) return cmd_lens(lens_n, lens_q, lens_n2, lens_q2, certificate);
        if (mil->parsed()) return cmd_milnor(file_a, index, max_length);
        if (orb->parsed()) return cmd_orbit(file_a);
        if (nil->parsed()) return cmd_nilpotent_ranks(ranks_m, ranks_k);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const std::invalid_argument& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const PreconditionViolatedError& e) {
        std::cerr << "precondition violated: " << e.what() << "\n";
        return kExitPrecondition;
    } catch (const InvalidLensParametersError& e) {
        std::cerr << "precondition violated: " << e.what() << "\n";
        return kExitPrecondition;
    } catch (const std::runtime_error& e) {
        std::cerr << "precondition violated: " << e.what() << "\n";
        return kExitPrecondition;
    }
    return 0;
}
