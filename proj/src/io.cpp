#include "surgeq/io.hpp"

#include <fstream>
#include <sstream>

namespace surgeq {

using nlohmann::json;

Framing parse_framing(const std::string& s) {
    std::size_t slash = s.find('/');
    try {
        Int p(slash == std::string::npos ? s : s.substr(0, slash));
        Int q(slash == std::string::npos ? std::string("1") : s.substr(slash + 1));
        return Framing(p, q);
    } catch (const std::invalid_argument&) {
        throw ParseError("bad framing: " + s);
    } catch (const PresentationError& e) {
        throw ParseError("bad framing " + s + ": " + e.what());
    }
}

std::string framing_to_string(const Framing& f) { return f.p.get_str() + "/" + f.q.get_str(); }

BraidWord parse_braid_word(int strands, const std::string& word) {
    BraidWord b;
    b.strands = strands;
    std::istringstream is(word);
    std::string tok;
    while (is >> tok) {
        if (tok.size() < 2 || tok[0] != 's') throw ParseError("bad braid token: " + tok);
        std::size_t caret = tok.find('^');
        int idx = 0;
        try {
            idx = std::stoi(tok.substr(1, caret == std::string::npos ? std::string::npos : caret - 1));
        } catch (...) {
            throw ParseError("bad braid token: " + tok);
        }
        int sign = 1;
        if (caret != std::string::npos) {
            std::string e = tok.substr(caret + 1);
            if (e == "-1")
                sign = -1;
            else if (e != "1")
                throw ParseError("bad braid exponent (use s_i or s_i^-1): " + tok);
        }
        if (idx < 1 || idx >= strands) throw ParseError("braid generator out of range: " + tok);
        b.letters.push_back({idx, sign});
    }
    return b;
}

std::string braid_word_to_string(const BraidWord& b) {
    std::ostringstream os;
    for (std::size_t i = 0; i < b.letters.size(); ++i) {
        if (i) os << " ";
        os << "s" << b.letters[i].index;
        if (b.letters[i].sign == -1) os << "^-1";
    }
    return os.str();
}

FramedLink link_from_json(const json& j) {
    try {
        FramedLink link;
        if (!j.is_object() || !j.contains("components") || !j.contains("lk"))
            throw ParseError("presentation needs 'components' and 'lk'");
        for (const json& c : j.at("components")) link.framings.push_back(parse_framing(c.at("framing").get<std::string>()));
        const std::size_t m = link.framings.size();

        const json& lk = j.at("lk");
        if (!lk.is_array() || lk.size() != m) throw ParseError("lk must be an m x m integer matrix");
        link.lk = IntMatrix(m, m);
        for (std::size_t i = 0; i < m; ++i) {
            if (!lk[i].is_array() || lk[i].size() != m) throw ParseError("lk must be an m x m integer matrix");
            for (std::size_t jj = 0; jj < m; ++jj) {
                const json& e = lk[i][jj];
                if (e.is_number_integer())
                    link.lk.at(i, jj) = Int(e.dump());
                else if (e.is_string())
                    link.lk.at(i, jj) = Int(e.get<std::string>());
                else
                    throw ParseError("lk entries must be integers");
            }
        }

        if (j.contains("braid")) {
            const json& b = j.at("braid");
            link.braid = parse_braid_word(b.at("strands").get<int>(), b.at("word").get<std::string>());
        }
        if (j.contains("longitudes")) {
            std::vector<FreeWord> longs;
            for (const json& w : j.at("longitudes")) longs.push_back(FreeWord::parse(w.get<std::string>()));
            link.longitudes = std::move(longs);
        }
        link.validate();
        return link;
    } catch (const json::exception& e) {
        throw ParseError(std::string("bad presentation json: ") + e.what());
    } catch (const PresentationError& e) {
        throw ParseError(std::string("invalid presentation: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string("bad presentation json: ") + e.what());
    }
}

json link_to_json(const FramedLink& link) {
    json j;
    j["components"] = json::array();
    for (const Framing& f : link.framings) j["components"].push_back({{"framing", framing_to_string(f)}});
    j["lk"] = json::array();
    for (std::size_t i = 0; i < link.lk.rows(); ++i) {
        json row = json::array();
        for (std::size_t c = 0; c < link.lk.cols(); ++c) {
            const Int& e = link.lk.at(i, c);
            if (e.fits_slong_p())
                row.push_back(e.get_si());
            else
                row.push_back(e.get_str());
        }
        j["lk"].push_back(std::move(row));
    }
    if (link.braid) j["braid"] = {{"strands", link.braid->strands}, {"word", braid_word_to_string(*link.braid)}};
    if (link.longitudes) {
        json longs = json::array();
        for (const FreeWord& w : *link.longitudes) longs.push_back(w.to_string());
        j["longitudes"] = std::move(longs);
    }
    return j;
}

FramedLink load_link(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw ParseError("cannot parse " + path + ": " + e.what());
    }
    return link_from_json(j);
}

TrilinearForm trilinear_from_json(const json& j) {
    try {
        TrilinearForm f = TrilinearForm::zero(j.at("m").get<int>());
        if (j.contains("coeffs"))
            for (const auto& [key, val] : j.at("coeffs").items()) {
                int a, b, c;
                if (std::sscanf(key.c_str(), "%d,%d,%d", &a, &b, &c) != 3)
                    throw ParseError("bad triple key: " + key);
                Int coeff = val.is_string() ? Int(val.get<std::string>()) : Int(val.dump());
                f.set(a, b, c, coeff);
            }
        return f;
    } catch (const json::exception& e) {
        throw ParseError(std::string("bad form json: ") + e.what());
    } catch (const TrilinearError& e) {
        throw ParseError(std::string("bad form json: ") + e.what());
    }
}

json trilinear_to_json(const TrilinearForm& f) {
    json coeffs = json::object();
    for (const auto& [t, c] : f.coeffs) {
        std::string key = std::to_string(t[0]) + "," + std::to_string(t[1]) + "," + std::to_string(t[2]);
        if (c.fits_slong_p())
            coeffs[key] = c.get_si();
        else
            coeffs[key] = c.get_str();
    }
    return {{"m", f.m}, {"coeffs", std::move(coeffs)}};
}

std::string rat_to_string(const Rat& r) { return r.get_num().get_str() + "/" + r.get_den().get_str(); }

namespace {

// integers emit as JSON numbers when they fit, exact strings otherwise;
// rationals are always exact "a/b" strings
json int_to_json(const Int& x) {
    if (x.fits_slong_p()) return json(x.get_si());
    return json(x.get_str());
}

}  // namespace

json linking_form_to_json(const LinkingForm& f) {
    json orders = json::array();
    for (const Int& d : f.orders) orders.push_back(int_to_json(d));
    json values = json::array();
    for (std::size_t i = 0; i < f.rank(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < f.rank(); ++j) row.push_back(rat_to_string(f.values.at(i, j)));
        values.push_back(std::move(row));
    }
    return {{"orders", std::move(orders)}, {"values", std::move(values)}};
}

json homology_to_json(const FirstHomology& h) {
    json factors = json::array();
    for (const Int& d : h.factors) factors.push_back(int_to_json(d));
    return {{"betti", h.betti}, {"factors", std::move(factors)}};
}

json verdict_to_json(const Verdict& v, bool with_certificate) {
    json j;
    j["status"] = to_string(v.status);
    j["relation"] = v.relation;
    j["rule"] = v.rule;
    if (!v.notes.empty()) j["notes"] = v.notes;
    if (with_certificate) {
        json cert = json::array();
        for (const CertificateEntry& e : v.certificate)
            cert.push_back({{"invariant", e.invariant}, {"a", e.value_a}, {"b", e.value_b}});
        j["certificate"] = std::move(cert);
    }
    return j;
}

}  // namespace surgeq
