// command line front end: worked examples checked against golden outputs,
// fusion ring operations, and group/cohomology queries
//
// exit codes: 0 success, 1 semantic failure (axiom violations, golden
// mismatch), 2 usage or input parse errors

#include <deligne/deligne.hpp>

#include <CLI11.hpp>

#include <functional>
#include <iostream>

using namespace deligne;

namespace {

Vec parse_orders(const std::string& csv) {
    Vec out;
    std::size_t pos = 0;
    while (pos <= csv.size()) {
        std::size_t comma = csv.find(',', pos);
        if (comma == std::string::npos) comma = csv.size();
        try {
            std::size_t used = 0;
            std::string piece = csv.substr(pos, comma - pos);
            out.push_back(std::stoll(piece, &used));
            if (used != piece.size()) throw std::invalid_argument("");
        } catch (const std::exception&) {
            throw std::invalid_argument("expected a comma-separated list of integers, got '" + csv + "'");
        }
        pos = comma + 1;
    }
    return out;
}

// ring inputs: "group:<orders>" and "ty:<orders>" build rings in place,
// anything else is read as a JSON file
FusionRing ring_from_spec(const std::string& spec) {
    if (spec.rfind("group:", 0) == 0) return group_ring(group_new(parse_orders(spec.substr(6))));
    if (spec.rfind("ty:", 0) == 0) return tambara_yamagami(group_new(parse_orders(spec.substr(3))));
    return ring_from_json(load_json_file(spec));
}

const std::string kFixtureDir = "data/fixtures/";
const std::string kGoldenDir = "data/golden/";

void require_format(const std::string& fmt) {
    if (fmt != "txt" && fmt != "json" && fmt != "csv")
        throw std::invalid_argument("unknown format '" + fmt + "' (known: txt, json, csv)");
}

// ---- module simples fixtures (mod6, mod22) --------------------------------

std::string simples_output(const Vec& orders, i64 field_char, const std::string& fmt) {
    auto simples = classify_module_simples(group_new(orders), field_char);
    if (fmt == "txt") {
        std::string out;
        for (const auto& s : simples) out += simple_name(s) + "\n";
        return out;
    }
    if (fmt == "json") {
        json j;
        j["char"] = field_char;
        j["group"] = orders;
        json list = json::array();
        for (const auto& s : simples)
            list.push_back(json::array({subgroup_name(s.subgroup), s.cocycle_label}));
        j["simples"] = std::move(list);
        return dump_json(j);
    }
    std::vector<std::vector<std::string>> rows{{"subgroup", "class"}};
    for (const auto& s : simples) rows.push_back({subgroup_name(s.subgroup), s.cocycle_label});
    return render_csv(rows);
}

// ---- module table fixtures (table-2b3t, table-2b2b) ------------------------

struct TableFixture {
    ModuleTable table;
    i64 pairs = 0;
    std::optional<i64> full; // size of the full classification, when the table is only an image
};

TableFixture build_table_fixture(const std::string& name) {
    json j = load_json_file(kFixtureDir + name);
    ModuleTable left = table_from_json(load_json_file(kFixtureDir + j.at("left").get<std::string>()));
    ModuleTable right = table_from_json(load_json_file(kFixtureDir + j.at("right").get<std::string>()));
    ModuleTable prod = module_table_product(left, right);

    std::map<std::string, std::string> names;
    for (auto it = j.at("relabel").begin(); it != j.at("relabel").end(); ++it)
        names[it.key()] = it.value().get<std::string>();
    std::vector<std::string> order = j.at("order").get<std::vector<std::string>>();

    TableFixture out;
    out.table = relabel_table(prod, names, order);
    out.pairs = static_cast<i64>(out.table.ring.rank());
    if (out.table.completeness == Completeness::ImageOnly) {
        auto p = parse_provenance(out.table.provenance);
        if (p) out.full = count_module_simples(group_new(p->orders), 0);
    }
    return out;
}

std::string table_output(const std::string& fixture, const std::string& fmt) {
    TableFixture t = build_table_fixture(fixture);
    std::string completeness = completeness_to_string(t.table.completeness);
    if (fmt == "txt") {
        std::string out = render_table(t.table);
        out += "completeness: " + completeness + "\n";
        if (t.full)
            out += "pairs: " + std::to_string(t.pairs) + " (full classification: " +
                   std::to_string(*t.full) + ")\n";
        return out;
    }
    if (fmt == "json") {
        json j = table_to_json(t.table);
        if (t.full) {
            j["full_classification"] = *t.full;
            j["pairs"] = t.pairs;
        }
        return dump_json(j);
    }
    auto rows = table_grid(t.table);
    rows[0][0] = ""; // no operation symbol in the csv corner
    rows.push_back({"completeness", completeness});
    if (t.full)
        rows.push_back({"pairs", std::to_string(t.pairs), std::to_string(*t.full)});
    return render_csv(rows);
}

// ---- real component fixture (vect-r) ---------------------------------------

std::string vectr_output(const std::string& fmt) {
    TwoCategoryModel m = model_from_json(load_json_file(kFixtureDir + "model_mod_vectC_real.json"));
    std::vector<Component> real_comps = product_components(m, m);
    TwoCategoryModel ac = strip_to_closed(m);
    std::vector<Component> ac_comps = product_components(ac, ac);

    std::vector<std::string> displays;
    for (const auto& c : real_comps) displays.push_back(component_display(c));

    if (fmt == "txt") {
        std::string out = "pi0 = " + std::to_string(real_comps.size()) + "; components: ";
        for (std::size_t i = 0; i < displays.size(); ++i) {
            if (i) out += ", ";
            out += displays[i];
        }
        out += "\n";
        out += "algebraically closed: pi0 = " + std::to_string(ac_comps.size()) + "\n";
        return out;
    }
    if (fmt == "json") {
        json j;
        j["ac_pi0"] = ac_comps.size();
        j["components"] = displays;
        j["field"] = field_to_string(m.field);
        j["pi0"] = real_comps.size();
        return dump_json(j);
    }
    std::vector<std::vector<std::string>> rows{{"component"}};
    for (const auto& d : displays) rows.push_back({d});
    return render_csv(rows);
}

// ---- coprime factorization demo (coprime-demo) ------------------------------

struct DemoLine {
    std::string g1, g2;
    i64 n1 = 0, n2 = 0, s1 = 0, s2 = 0, full = 0;
    FactorizationCertificate cert;
};

DemoLine demo_line(const Vec& t1, const Vec& t2) {
    DemoLine d;
    FiniteAbelianGroup g1 = group_new(t1), g2 = group_new(t2);
    d.g1 = group_name(g1);
    d.g2 = group_name(g2);
    d.n1 = g1.order;
    d.n2 = g2.order;
    d.s1 = count_module_simples(g1, 0);
    d.s2 = count_module_simples(g2, 0);
    Vec joint = t1;
    joint.insert(joint.end(), t2.begin(), t2.end());
    d.full = count_module_simples(group_new(joint), 0);
    d.cert = certify_totals(d.n1, d.n2);
    return d;
}

std::vector<DemoLine> coprime_demo_lines() {
    std::vector<DemoLine> out;
    for (i64 n1 = 2; n1 * (n1 + 1) <= 36; ++n1)
        for (i64 n2 = n1 + 1; n1 * n2 <= 36; ++n2) {
            if (std::gcd(n1, n2) != 1) continue;
            for (const Vec& t1 : abelian_types(n1))
                for (const Vec& t2 : abelian_types(n2)) out.push_back(demo_line(t1, t2));
        }
    out.push_back(demo_line({2}, {2}));
    out.push_back(demo_line({2}, {4}));
    return out;
}

std::string render_demo_line(const DemoLine& d) {
    std::string line = d.g1 + " ⊡ " + d.g2 + ": " + std::to_string(d.s1) + " x " +
                       std::to_string(d.s2) + " = ";
    if (d.s1 * d.s2 == d.full)
        line += std::to_string(d.full) + " simples; ";
    else
        line += std::to_string(d.s1 * d.s2) + " of " + std::to_string(d.full) + " simples; ";
    line += certificate_status(d.cert) + " (" + d.cert.detail + ")";
    return line;
}

std::string demo_output(const std::string& fmt) {
    std::vector<DemoLine> lines = coprime_demo_lines();
    if (fmt == "txt") {
        std::string out;
        for (const auto& d : lines) out += render_demo_line(d) + "\n";
        return out;
    }
    if (fmt == "json") {
        json pairs = json::array(), rest = json::array();
        for (const auto& d : lines) {
            json e;
            e["certified"] = d.cert.certified;
            e["detail"] = d.cert.detail;
            e["full"] = d.full;
            e["g1"] = d.g1;
            e["g2"] = d.g2;
            e["n1"] = d.n1;
            e["n2"] = d.n2;
            e["product"] = d.s1 * d.s2;
            e["s1"] = d.s1;
            e["s2"] = d.s2;
            (d.cert.certified ? pairs : rest).push_back(std::move(e));
        }
        json j;
        j["non_coprime"] = std::move(rest);
        j["pairs"] = std::move(pairs);
        return dump_json(j);
    }
    std::vector<std::vector<std::string>> rows{
        {"g1", "g2", "n1", "n2", "s1", "s2", "product", "full", "certified"}};
    for (const auto& d : lines)
        rows.push_back({d.g1, d.g2, std::to_string(d.n1), std::to_string(d.n2), std::to_string(d.s1),
                        std::to_string(d.s2), std::to_string(d.s1 * d.s2), std::to_string(d.full),
                        certificate_status(d.cert)});
    return render_csv(rows);
}

// ---- example dispatch -------------------------------------------------------

std::string fixture_output(const std::string& id, const std::string& fmt) {
    require_format(fmt);
    if (id == "mod6") return simples_output({6}, 0, fmt);
    if (id == "mod22") return simples_output({2, 2}, 0, fmt);
    if (id == "vect-r") return vectr_output(fmt);
    if (id == "table-2b3t") return table_output("product_2b3t.json", fmt);
    if (id == "table-2b2b") return table_output("product_2b2b.json", fmt);
    if (id == "coprime-demo") return demo_output(fmt);
    throw std::invalid_argument(
        "unknown example id '" + id +
        "' (known: mod6, mod22, vect-r, table-2b3t, table-2b2b, coprime-demo)");
}

int run_example(const std::string& id, const std::string& fmt, bool check) {
    std::string out = fixture_output(id, fmt);
    if (!check) {
        std::cout << out;
        return 0;
    }
    std::string path = kGoldenDir + id + "." + fmt;
    std::string golden = read_text_file(path);
    if (out == golden) {
        std::cout << "ok " << id << "." << fmt << "\n";
        return 0;
    }
    std::cerr << "output differs from " << path << "\n";
    std::cerr << "---- computed ----\n" << out << "---- golden ----\n" << golden;
    return 1;
}

int run_fusion_verify(const std::string& spec) {
    FusionRing r = ring_from_spec(spec);
    ValidationReport rep = validate(r);
    if (rep.ok) {
        std::cout << "ok\n";
        return 0;
    }
    for (const auto& v : rep.violations) std::cout << "violation: " << v << "\n";
    return 1;
}

int run_fusion_product(const std::string& left, const std::string& right, const std::string& out_path) {
    FusionRing p = deligne_product(ring_from_spec(left), ring_from_spec(right));
    std::string text = dump_json(ring_to_json(p));
    if (out_path.empty())
        std::cout << text;
    else
        write_text_file(out_path, text);
    return 0;
}

int run_fusion_fpdim(const std::string& spec) {
    FPData fp = fp_data(ring_from_spec(spec));
    std::string line;
    for (std::size_t i = 0; i < fp.dims.size(); ++i) {
        if (i) line += ", ";
        line += format_number(fp.dims[i]);
    }
    line += "; total ";
    line += fp.integral ? std::to_string(fp.total_int) : format_number(fp.total);
    std::cout << line << "\n";
    return 0;
}

int run_group_subgroups(const std::string& orders_csv) {
    FiniteAbelianGroup g = group_new(parse_orders(orders_csv));
    for (const auto& s : enumerate_subgroups(g))
        std::cout << subgroup_name(s) << " (order " << s.order << ")\n";
    return 0;
}

int run_group_h2(const std::string& orders_csv, i64 field_char) {
    CocycleClassGroup classes = h2_classes(parse_orders(orders_csv), field_char);
    if (classes.labels.size() == 1) {
        std::cout << "1 class (trivial)\n";
        return 0;
    }
    std::cout << classes.labels.size() << " classes: ";
    for (std::size_t i = 0; i < classes.labels.size(); ++i) {
        if (i) std::cout << ", ";
        std::cout << classes.labels[i];
    }
    std::cout << "\n";
    return 0;
}

int run_group_simples(const std::string& orders_csv, i64 field_char) {
    std::cout << simples_output(parse_orders(orders_csv), field_char, "txt");
    return 0;
}

int guard(const std::function<int()>& fn) {
    try {
        return fn();
    } catch (const json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact invariants of tensor products of fusion categories"};
    app.require_subcommand(1);
    std::function<int()> action;

    auto* example = app.add_subcommand("example", "run a worked example");
    std::string ex_id, ex_fmt = "txt";
    bool ex_check = false;
    example->add_option("id", ex_id, "example id")->required();
    example->add_option("--format", ex_fmt, "output format: txt, json, csv");
    example->add_flag("--check", ex_check, "compare against the golden output");
    example->callback([&] { action = [&] { return run_example(ex_id, ex_fmt, ex_check); }; });

    auto* fusion = app.add_subcommand("fusion", "fusion ring operations");
    fusion->require_subcommand(1);
    std::string fu_input, fu_left, fu_right, fu_out;

    auto* verify = fusion->add_subcommand("verify", "check the ring axioms");
    verify->add_option("--input", fu_input, "ring: group:<orders>, ty:<orders>, or a JSON file")
        ->required();
    verify->callback([&] { action = [&] { return run_fusion_verify(fu_input); }; });

    auto* product = fusion->add_subcommand("product", "tensor product of two rings");
    product->add_option("--left", fu_left, "left ring")->required();
    product->add_option("--right", fu_right, "right ring")->required();
    product->add_option("--out", fu_out, "write the product JSON here instead of stdout");
    product->callback([&] { action = [&] { return run_fusion_product(fu_left, fu_right, fu_out); }; });

    auto* fpdim = fusion->add_subcommand("fpdim", "Frobenius-Perron dimensions");
    fpdim->add_option("--input", fu_input, "ring: group:<orders>, ty:<orders>, or a JSON file")
        ->required();
    fpdim->callback([&] { action = [&] { return run_fusion_fpdim(fu_input); }; });

    auto* group = app.add_subcommand("group", "abelian group queries");
    group->require_subcommand(1);
    std::string gr_orders;
    i64 gr_char = 0;

    auto* subgroups = group->add_subcommand("subgroups", "list all subgroups");
    subgroups->add_option("--orders", gr_orders, "cyclic factor orders, comma separated")->required();
    subgroups->callback([&] { action = [&] { return run_group_subgroups(gr_orders); }; });

    auto* h2 = group->add_subcommand("h2", "second cohomology classes");
    h2->add_option("--orders", gr_orders, "cyclic factor orders, comma separated")->required();
    h2->add_option("--char", gr_char, "field characteristic (0 or a prime)");
    h2->callback([&] { action = [&] { return run_group_h2(gr_orders, gr_char); }; });

    auto* simples = group->add_subcommand("simples", "simple module categories over Vect_G");
    simples->add_option("--orders", gr_orders, "cyclic factor orders, comma separated")->required();
    simples->add_option("--char", gr_char, "field characteristic (0 or a prime)");
    simples->callback([&] { action = [&] { return run_group_simples(gr_orders, gr_char); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return guard(action);
}
