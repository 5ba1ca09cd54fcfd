#include <cstdio>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cyc/constructions.hpp"
#include "cyc/convolutional.hpp"
#include "cyc/decompose.hpp"
#include "json.hpp"

using json = nlohmann::ordered_json;
using namespace cyc;

namespace {

struct GlobalOpts {
    std::string format = "json";
    std::uint64_t budget = 1'000'000'000;
    unsigned workers = 1;
    std::uint64_t seed = 0;  // reserved; nothing algorithmic is randomized
};

FieldPtr field_for(std::uint64_t q) {
    for (std::uint64_t p = 2; p * p <= q; ++p)
        if (q % p == 0) {
            unsigned m = 0;
            std::uint64_t t = q;
            while (t > 1) {
                if (t % p != 0) throw Error(Errc::Usage, "q must be a prime power");
                t /= p;
                ++m;
            }
            return Field::make(p, m);
        }
    return Field::make(q, 1);
}

std::vector<std::uint64_t> parse_coeffs(const std::string& s) {
    std::vector<std::uint64_t> out;
    std::size_t pos = 0;
    while (pos < s.size()) {
        std::size_t next = s.find(',', pos);
        if (next == std::string::npos) next = s.size();
        out.push_back(std::stoull(s.substr(pos, next - pos)));
        pos = next + 1;
    }
    return out;
}

SignVector parse_signs(const std::string& s) {
    SignVector out;
    std::size_t pos = 0;
    while (pos < s.size()) {
        std::size_t next = s.find(',', pos);
        if (next == std::string::npos) next = s.size();
        out.push_back(std::stoi(s.substr(pos, next - pos)));
        pos = next + 1;
    }
    return out;
}

json poly_json(const Poly& p) { return json(p.coeffs()); }

std::string join(const std::vector<std::uint64_t>& v, char sep = ' ') {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += sep;
        s += std::to_string(v[i]);
    }
    return s;
}

std::string join_signs(const SignVector& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(v[i]);
    }
    return s;
}

// Flat records print as one JSON array, a CSV table, or aligned text.
void emit_records(const GlobalOpts& g, const std::vector<json>& records) {
    if (g.format == "json") {
        json arr = json::array();
        for (const auto& r : records) arr.push_back(r);
        std::printf("%s\n", arr.dump(2).c_str());
        return;
    }
    if (records.empty()) return;
    std::vector<std::string> keys;
    for (auto it = records[0].begin(); it != records[0].end(); ++it)
        keys.push_back(it.key());
    auto cell = [](const json& v) -> std::string {
        if (v.is_string()) return v.get<std::string>();
        if (v.is_array()) {
            std::string s;
            for (const auto& e : v) {
                if (!s.empty()) s += ' ';
                s += e.dump();
            }
            return s;
        }
        return v.dump();
    };
    if (g.format == "csv") {
        for (std::size_t i = 0; i < keys.size(); ++i)
            std::printf("%s%s", i ? "," : "", keys[i].c_str());
        std::printf("\n");
        for (const auto& r : records) {
            for (std::size_t i = 0; i < keys.size(); ++i)
                std::printf("%s%s", i ? "," : "", cell(r.at(keys[i])).c_str());
            std::printf("\n");
        }
        return;
    }
    for (const auto& r : records) {
        for (const auto& k : keys)
            std::printf("%-12s %s\n", k.c_str(), cell(r.at(k)).c_str());
        std::printf("\n");
    }
}

json theta_spec(std::uint64_t q, std::uint64_t N) {
    auto f = field_for(q);
    auto e = min_extension_degree(q, N);
    auto ext = Field::make(f->p(), f->m() * static_cast<unsigned>(e));
    return json{{"ext_p", ext->p()},
                {"ext_m", ext->m()},
                {"ext_modulus", ext->modulus()},
                {"theta", primitive_root_of_unity(*ext, N)}};
}

json dist_json(const WeightReport& rep) {
    return json{{"d", rep.d},
                {"exact", rep.exact},
                {"lower_bound", rep.lower_bound},
                {"method", rep.method == DistMethod::Exhaustive ? "exhaustive" : "infoset"},
                {"certificate", rep.certificate.coeffs()},
                {"enumerated", rep.enumerated}};
}

int run(int argc, char** argv) {
    GlobalOpts g;
    CLI::App app{"composite-length cyclic code toolkit"};
    app.require_subcommand(1);
    app.add_option("--format", g.format)->check(CLI::IsMember({"json", "csv", "text"}));
    app.add_option("--budget", g.budget);
    app.add_option("--workers", g.workers);
    app.add_option("--seed", g.seed);

    // construct
    auto* construct = app.add_subcommand("construct", "build generator polynomials");
    std::string family, epsilon = "all";
    std::uint64_t q = 2, n = 0, r = 0, n1 = 0, n2 = 0, N = 0, u = 1, k = 0;
    int tag = 1;
    construct->add_option("family", family)->required()->check(CLI::IsMember({"cr", "ding"}));
    construct->add_option("--q", q)->required();
    construct->add_option("--n", n);
    construct->add_option("--r", r);
    construct->add_option("--n1", n1);
    construct->add_option("--n2", n2);
    construct->add_option("--tag", tag);
    construct->add_option("--epsilon", epsilon);

    std::string gstr;
    auto add_code_opts = [&](CLI::App* cmd) {
        cmd->add_option("--q", q)->required();
        cmd->add_option("--N", N)->required();
        cmd->add_option("--g", gstr)->required();
    };
    auto* mindist = app.add_subcommand("mindist", "minimum distance of a cyclic code");
    add_code_opts(mindist);
    std::string method = "auto";
    mindist->add_option("--method", method)->check(CLI::IsMember({"auto", "exhaustive", "infoset"}));

    auto* weightdist = app.add_subcommand("weightdist", "full weight distribution");
    add_code_opts(weightdist);

    auto* decompose = app.add_subcommand("decompose", "length-n*r component split");
    add_code_opts(decompose);
    decompose->add_option("--n", n)->required();
    decompose->add_option("--r", r)->required();

    auto* equiv = app.add_subcommand("equiv", "multiplier image of a cyclic code");
    add_code_opts(equiv);
    equiv->add_option("--u", u)->required();
    std::string g2str;
    equiv->add_option("--g2", g2str);

    auto* conv = app.add_subcommand("conv", "convolutional encoder from a cyclic code");
    add_code_opts(conv);
    conv->add_option("--n", n)->required();
    conv->add_option("--k", k)->required();
    unsigned dbound = 3;
    bool search = false;
    conv->add_option("--degree-bound", dbound);
    conv->add_flag("--search", search, "run the bounded free-distance search");

    auto* table = app.add_subcommand("table", "distances per equivalence class");
    table->add_option("--q", q)->required();
    table->add_option("--n", n);
    table->add_option("--r", r);
    bool ding_table = false;
    table->add_flag("--ding", ding_table);
    table->add_option("--n1", n1);
    table->add_option("--n2", n2);
    table->add_option("--tag", tag);

    for (auto* sub : app.get_subcommands(nullptr)) sub->fallthrough();
    app.parse(argc, argv);

    MinDistOptions opts;
    opts.budget = g.budget;
    opts.workers = g.workers;

    auto parse_code = [&]() {
        auto f = field_for(q);
        return make_cyclic(f, N, Poly(f, parse_coeffs(gstr)));
    };

    std::vector<json> records;
    if (*construct) {
        if (family == "cr") {
            if (n == 0 || r == 0) throw Error(Errc::Usage, "cr needs --n and --r");
            auto f = field_for(q);
            std::vector<SignVector> eps_list;
            if (epsilon == "all")
                eps_list = enumerate_lambda(q, r);
            else
                eps_list.push_back(parse_signs(epsilon));
            for (const auto& eps : eps_list) {
                auto code = cr_generator(n, r, f, eps);
                records.push_back(json{{"tag", "cr"},
                                       {"q", q},
                                       {"n", n},
                                       {"r", r},
                                       {"epsilon", eps},
                                       {"generator", code.g.coeffs()},
                                       {"N", code.N},
                                       {"k", code.k},
                                       {"theta_spec", theta_spec(q, n * r)}});
            }
        } else {
            if (n1 == 0 || n2 == 0) throw Error(Errc::Usage, "ding needs --n1 and --n2");
            auto f = field_for(q);
            std::vector<std::array<int, 3>> eps_list;
            if (epsilon == "all") {
                for (int a : {1, -1})
                    for (int b : {1, -1})
                        for (int c : {1, -1}) eps_list.push_back({a, b, c});
            } else {
                auto v = parse_signs(epsilon);
                if (v.size() != 3) throw Error(Errc::Usage, "ding epsilon has three signs");
                eps_list.push_back({v[0], v[1], v[2]});
            }
            for (const auto& eps : eps_list) {
                auto code = ding_generator(tag, n1, n2, f, eps);
                records.push_back(json{{"tag", "ding" + std::to_string(tag)},
                                       {"q", q},
                                       {"n1", n1},
                                       {"n2", n2},
                                       {"epsilon", eps},
                                       {"generator", code.g.coeffs()},
                                       {"N", code.N},
                                       {"k", code.k},
                                       {"theta_spec", theta_spec(q, n1 * n2)}});
            }
        }
    } else if (*mindist) {
        auto code = parse_code();
        if (method == "exhaustive") opts.method = DistMethod::Exhaustive;
        if (method == "infoset") opts.method = DistMethod::InfoSet;
        records.push_back(dist_json(min_distance(code, opts)));
    } else if (*weightdist) {
        auto code = parse_code();
        records.push_back(json{{"N", code.N}, {"k", code.k},
                               {"counts", weight_distribution(code)}});
    } else if (*decompose) {
        auto code = parse_code();
        auto D = make_decomposition(code.field, n, r);
        auto comps = component_codes(code, D);
        json comp_list = json::array();
        for (std::uint64_t t = 0; t < r; ++t) {
            json entry{{"t", t}};
            if (!comps[t]) {
                entry["zero"] = true;
            } else {
                entry["zero"] = false;
                entry["generator_ext"] = comps[t]->g.coeffs();
                auto down = descend_poly(comps[t]->g, *D.emb);
                if (down) entry["generator"] = down->coeffs();
                entry["k"] = comps[t]->k;
            }
            comp_list.push_back(entry);
        }
        records.push_back(json{{"n", n},
                               {"r", r},
                               {"lambda", D.lambda},
                               {"components", comp_list},
                               {"distance_lower_bound", distance_lower_bound(code, D)}});
    } else if (*equiv) {
        auto code = parse_code();
        auto image = multiplier_image(code, u);
        json rec{{"u", u}, {"generator", image.g.coeffs()}};
        if (!g2str.empty())
            rec["equal"] = image.g == Poly(code.field, parse_coeffs(g2str));
        records.push_back(rec);
    } else if (*conv) {
        auto code = parse_code();
        auto enc = build_encoder(code, n, k);
        json rows = json::array();
        for (const auto& row : enc.G) {
            json jr = json::array();
            for (const auto& p : row) jr.push_back(p.coeffs());
            rows.push_back(jr);
        }
        json rec{{"k", enc.k},
                 {"n", enc.n},
                 {"delta", enc.delta},
                 {"row_degrees", enc.row_degrees},
                 {"rows", rows}};
        if (search) {
            auto res = free_distance_search(enc, dbound, g.budget, opts);
            rec["d_free_lower"] = res.lower;
            rec["d_free_upper"] = res.upper;
            rec["d_free_exact"] = res.exact;
        } else {
            rec["d_free_lower"] = min_distance(code, opts).d;
        }
        records.push_back(rec);
    } else if (*table) {
        if (ding_table) {
            if (n1 == 0 || n2 == 0) throw Error(Errc::Usage, "ding table needs --n1 and --n2");
            auto f = field_for(q);
            auto classes = ding_classes(tag);
            for (int c = 0; c < 2; ++c) {
                auto code = ding_generator(tag, n1, n2, f, classes[c][0]);
                auto rep = min_distance(code, opts);
                records.push_back(json{{"construction", "ding" + std::to_string(tag)},
                                       {"class", c == 0 ? "A1" : "A2"},
                                       {"epsilon", classes[c][0]},
                                       {"n", code.N},
                                       {"k", code.k},
                                       {"d", rep.d},
                                       {"exact", rep.exact}});
            }
        } else {
            if (n == 0 || r == 0) throw Error(Errc::Usage, "table needs --n and --r");
            auto f = field_for(q);
            int label = 0;
            for (const auto& cls : lambda_classes(q % r, r)) {
                auto code = cr_generator(n, r, f, cls[0]);
                auto rep = min_distance(code, opts);
                records.push_back(json{{"construction", "cr"},
                                       {"class", label++},
                                       {"epsilon", join_signs(cls[0])},
                                       {"codes", cls.size()},
                                       {"n", code.N},
                                       {"k", code.k},
                                       {"d", rep.d},
                                       {"exact", rep.exact}});
            }
        }
    }
    emit_records(g, records);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return 0;  // --help
        std::fprintf(stderr, "%s\n", e.what());
        return 2;
    } catch (const Error& e) {
        std::fprintf(stderr, "error [%s]: %s\n", errc_name(e.code()), e.what());
        if (e.code() == Errc::Usage) return 2;
        if (e.code() == Errc::BudgetExceeded) return 4;
        return 3;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 3;
    }
}
