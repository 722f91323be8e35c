#include "wordmap/cli.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "wordmap/conjugacy.hpp"
#include "wordmap/counts.hpp"
#include "wordmap/cyclotomic.hpp"
#include "wordmap/magnus.hpp"
#include "wordmap/rootsys.hpp"
#include "wordmap/trace_poly.hpp"

namespace wordmap {

namespace {

using nlohmann::json;

struct CommonOpts {
    std::string word;
    std::string group = "sl2";
    uint32_t q = 5;
    std::vector<uint32_t> modulus;
    std::string constants;
    uint64_t budget = 10'000'000'000ull;
    int workers = 1;
    uint64_t samples = 0;
    uint64_t seed = 0;
    bool seed_given = false;
    bool relax_central = false;
    bool dump_image = false;
    bool timing = false;
    std::string format = "json";
    std::string out_path;
    // resolved config echo, filled by the dispatcher for traceability
    nlohmann::json config_echo;

    ImageOptions image_options() const { return ImageOptions{budget, workers}; }
};

long parse_long(const std::string& s) {
    std::size_t pos = 0;
    long v = std::stol(s, &pos);
    if (pos != s.size())
        throw std::invalid_argument("bad integer literal: " + s);
    return v;
}

/// "a,b;c,d;e,f;g,h" -> 2x2 matrices, two semicolon-separated rows
/// each. Entries are integers reduced into the prime subfield.
std::vector<std::array<long, 4>> parse_matrix_literals(const std::string& text) {
    std::vector<long> entries;
    std::string token;
    std::istringstream rows(text);
    while (std::getline(rows, token, ';')) {
        std::istringstream cols(token);
        std::string cell;
        int n = 0;
        while (std::getline(cols, cell, ',')) {
            entries.push_back(parse_long(cell));
            ++n;
        }
        if (n != 2)
            throw std::invalid_argument("matrix literal rows must have two entries: " + token);
    }
    if (entries.empty() || entries.size() % 4 != 0)
        throw std::invalid_argument("constants must be 2x2 matrix literals \"a,b;c,d\"");
    std::vector<std::array<long, 4>> out;
    for (std::size_t i = 0; i < entries.size(); i += 4)
        out.push_back({entries[i], entries[i + 1], entries[i + 2], entries[i + 3]});
    return out;
}

GroupTable build_group_from(const CommonOpts& opt) {
    FieldSpec fs = FieldSpec::for_q(opt.q, {opt.modulus.begin(), opt.modulus.end()});
    return GroupTable::build(kind_from_name(opt.group), fs);
}

uint32_t matrix_to_index(const GroupTable& G, const std::array<long, 4>& m) {
    const Field& F = G.field();
    return G.index_of({F.from_int(m[0]), F.from_int(m[1]), F.from_int(m[2]), F.from_int(m[3])});
}

json group_block(const GroupTable& G) {
    return json{{"kind", kind_name(G.kind())},
                {"q", G.field().q()},
                {"order", G.order()}};
}

json stats_block(const ImageStats& st) {
    json j{{"unipotent_count", st.unipotent_count},
           {"nontrivial_unipotent_present", st.nontrivial_unipotent_present},
           {"semisimple_trace_coverage",
            {{"image", st.semisimple_invariants_in_image},
             {"group", st.semisimple_invariants_in_group}}},
           {"class_coverage", {{"image", st.classes_met}, {"group", st.class_count}}}};
    if (st.minus_one_defined)
        j["contains_minus_one"] = st.contains_minus_one;
    else
        j["contains_minus_one"] = nullptr;
    return j;
}

class Timer {
public:
    Timer() : start_(std::chrono::steady_clock::now()) {}
    long long ms() const {
        return std::chrono::duration_cast<std::chrono::milliseconds>(
                   std::chrono::steady_clock::now() - start_)
            .count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

void emit_text(const CommonOpts& opt, const std::string& text, std::ostream& out) {
    if (!opt.out_path.empty()) {
        std::ofstream f(opt.out_path);
        if (!f)
            throw std::invalid_argument("cannot open output file: " + opt.out_path);
        f << text;
    } else {
        out << text;
    }
}

/// One header-free CSV row: (type, rank, param, result, witness).
/// Row-only output keeps batch sweeps concatenable.
void emit_csv_row(const CommonOpts& opt, const std::string& type, int rank,
                  const std::string& param, const std::string& result,
                  const std::string& witness, std::ostream& out) {
    std::ostringstream row;
    row << type << "," << rank << "," << param << "," << result << "," << witness << "\n";
    emit_text(opt, row.str(), out);
}

void finish_report(json& report, const std::string& command, const CommonOpts& opt,
                   const Timer& timer, bool exhaustive, std::ostream& out) {
    report["schema"] = 1;
    report["command"] = command;
    report["config"] = opt.config_echo;
    json prov{{"version", kToolVersion},
              {"workers", opt.workers},
              {"exhaustive", exhaustive}};
    if (opt.timing)
        prov["timing_ms"] = timer.ms();
    report["provenance"] = prov;
    emit_text(opt, report.dump() + "\n", out);
}

void add_group_flags(CLI::App* cmd, CommonOpts& opt) {
    cmd->add_option("--group", opt.group, "group kind: sl2, gl2, pgl2")->default_val("sl2");
    cmd->add_option("--q", opt.q, "field size (prime power)")->default_val(5);
    cmd->add_option("--modulus", opt.modulus,
                    "irreducible modulus coefficients, ascending, monic");
}

void add_run_flags(CLI::App* cmd, CommonOpts& opt) {
    cmd->add_option("--budget", opt.budget, "bound on |G|^arity for exhaustive runs");
    cmd->add_option("--workers", opt.workers, "worker thread count")->default_val(1);
    cmd->add_flag("--timing", opt.timing, "embed wallclock timing in the report");
    cmd->add_option("--format", opt.format, "json or csv")->default_val("json");
    cmd->add_option("--out", opt.out_path, "write the report to a file instead of stdout");
}

// ---------------------------------------------------------------------------
// subcommand bodies

void cmd_image(const CommonOpts& opt, std::ostream& out) {
    Timer timer;
    Word w = parse_plain_word(opt.word);
    GroupTable G = build_group_from(opt);
    bool exhaustive = opt.samples == 0;
    ElementSet image = exhaustive
                           ? word_image(w, G, opt.image_options())
                           : sampled_image(w, G, opt.samples, opt.seed, opt.workers);
    json result{{"group", group_block(G)},
                {"word", w.to_string()},
                {"image_size", image.count()},
                {"surjective", image.is_full()}};
    if (!exhaustive) {
        result["lower_bound"] = true;
        result["samples"] = opt.samples;
        result["seed"] = opt.seed;
    }
    result["stats"] = stats_block(image_stats(image, G));
    if (opt.dump_image)
        result["image_hex"] = image.to_hex();
    json report{{"result", result}};
    finish_report(report, "image", opt, timer, exhaustive, out);
}

void cmd_image_const(const CommonOpts& opt, std::ostream& out) {
    Timer timer;
    ParsedWord pw = parse_word(opt.word);
    if (std::holds_alternative<Word>(pw))
        throw std::invalid_argument("image-const: word has no constant slots; use image");
    const WordWithConstants& wc = std::get<WordWithConstants>(pw);
    GroupTable G = build_group_from(opt);
    std::vector<uint32_t> sigma;
    for (const auto& m : parse_matrix_literals(opt.constants))
        sigma.push_back(matrix_to_index(G, m));
    ElementSet image =
        word_image_with_constants(wc, sigma, G, !opt.relax_central, opt.image_options());
    json result{{"group", group_block(G)},
                {"word", wc.to_string()},
                {"image_size", image.count()},
                {"surjective", image.is_full()},
                {"stats", stats_block(image_stats(image, G))}};
    if (opt.dump_image)
        result["image_hex"] = image.to_hex();
    json report{{"result", result}};
    finish_report(report, "image-const", opt, timer, true, out);
}

void cmd_trace_image(const CommonOpts& opt, std::ostream& out) {
    Timer timer;
    GroupTable G = build_group_from(opt);
    ParsedWord pw = parse_word(opt.word);
    TraceImageReport rep;
    std::string word_str;
    if (std::holds_alternative<Word>(pw)) {
        rep = trace_image(std::get<Word>(pw), G, opt.image_options());
        word_str = std::get<Word>(pw).to_string();
    } else {
        const WordWithConstants& wc = std::get<WordWithConstants>(pw);
        std::vector<uint32_t> sigma;
        for (const auto& m : parse_matrix_literals(opt.constants))
            sigma.push_back(matrix_to_index(G, m));
        rep = trace_image_with_constants(wc, sigma, G, !opt.relax_central, opt.image_options());
        word_str = wc.to_string();
    }
    json report{{"result",
                 {{"group", group_block(G)},
                  {"word", word_str},
                  {"values", rep.values},
                  {"cardinality", rep.values.size()},
                  {"singleton", rep.singleton},
                  {"group_value_count", rep.group_value_count}}}};
    finish_report(report, "trace-image", opt, timer, true, out);
}

void cmd_stats(const CommonOpts& opt, std::ostream& out) {
    Timer timer;
    Word w = parse_plain_word(opt.word);
    GroupTable G = build_group_from(opt);
    ElementSet image = word_image(w, G, opt.image_options());
    json report{{"result",
                 {{"group", group_block(G)},
                  {"word", w.to_string()},
                  {"image_size", image.count()},
                  {"surjective", image.is_full()},
                  {"stats", stats_block(image_stats(image, G))}}}};
    finish_report(report, "stats", opt, timer, true, out);
}

json poly_terms_json(const LaurentPoly& p) {
    json terms = json::array();
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it)
        terms.push_back(json{{"e", it->first}, {"c", it->second.get_str()}});
    return terms;
}

void cmd_magnus(const CommonOpts& opt, std::ostream& out) {
    Timer timer;
    Word w = parse_plain_word(opt.word);
    MagnusMatrix m = magnus_image(w);
    json result{{"word", w.to_string()},
                {"alpha", m.alpha.to_string()},
                {"beta", m.beta.to_string()},
                {"beta_terms", poly_terms_json(m.beta)},
                {"variables", m.beta.vars().names},
                {"in_derived_subgroup", w.in_derived_subgroup()},
                {"in_F2", m.is_identity()}};
    result["f_w"] = w.in_derived_subgroup() ? json(m.beta.to_string()) : json(nullptr);
    json report{{"result", result}};
    finish_report(report, "magnus", opt, timer, true, out);
}

void cmd_primeset(const CommonOpts& opt, std::ostream& out) {
    Timer timer;
    Word w = parse_plain_word(opt.word);
    std::set<unsigned long> s = prime_set_S(w);
    json report{{"result", {{"word", w.to_string()}, {"S_w", s}}}};
    finish_report(report, "primeset", opt, timer, true, out);
}

void cmd_trace_poly(const CommonOpts& opt, std::ostream& out) {
    Timer timer;
    Word w = parse_plain_word(opt.word);
    std::vector<IntMat2> constants;
    if (!opt.constants.empty())
        for (const auto& m : parse_matrix_literals(opt.constants))
            constants.push_back(IntMat2{{{m[0], m[1]}, {m[2], m[3]}}});
    LaurentPoly psi = trace_polynomial(w, constants);
    json report{{"result",
                 {{"word", w.to_string()},
                  {"psi", psi.to_string()},
                  {"terms", poly_terms_json(psi)}}}};
    finish_report(report, "trace-poly", opt, timer, true, out);
}

void cmd_counts(const CommonOpts& opt, std::ostream& out) {
    Timer timer;
    Word w = parse_plain_word(opt.word);
    GroupTable G = build_group_from(opt);
    uint64_t ww = count_Ww(w, G, opt.image_options());
    json result{{"group", group_block(G)}, {"word", w.to_string()}, {"Ww", ww}};
    if (G.kind() == GroupKind::SL2) {
        result["Tw"] = count_Tw(w, G, opt.image_options());
        // dimension heuristic q^{3n-1}; reported, never asserted
        double heuristic = 1;
        for (int i = 0; i < 3 * w.arity() - 1; ++i)
            heuristic *= G.field().q();
        result["heuristic_q_pow_3n_minus_1"] = heuristic;
    }
    json report{{"result", result}};
    finish_report(report, "counts", opt, timer, true, out);
}

void cmd_width(const CommonOpts& opt, std::ostream& out) {
    Timer timer;
    GroupTable G = build_group_from(opt);
    json report{{"result",
                 {{"group", group_block(G)},
                  {"commutator_width", commutator_width(G, opt.image_options())}}}};
    finish_report(report, "width", opt, timer, true, out);
}

void cmd_covering(const CommonOpts& opt, std::ostream& out) {
    Timer timer;
    GroupTable G = build_group_from(opt);
    CoveringNumbers cn = covering_numbers(G);
    json result{{"group", group_block(G)}};
    result["covering"] = cn.covering ? json(*cn.covering) : json(nullptr);
    result["extended"] = cn.extended ? json(*cn.extended) : json(nullptr);
    json report{{"result", result}};
    finish_report(report, "covering", opt, timer, true, out);
}

void cmd_thompson(const CommonOpts& opt, std::ostream& out) {
    Timer timer;
    FieldSpec fs = FieldSpec::for_q(opt.q, {opt.modulus.begin(), opt.modulus.end()});
    GroupTable G = GroupTable::build(GroupKind::PSL2, fs);
    ClassPartition part = conjugacy_classes(G);
    json classes = json::array();
    bool found = false;
    for (const ConjClass& cls : part.classes) {
        if (cls.size == 1)
            continue;
        bool covers = class_product_covers({cls.members, cls.members}, G);
        found = found || covers;
        classes.push_back(json{{"size", cls.size},
                               {"invariant", G.invariant_of(cls.representative)},
                               {"squares_to_group", covers}});
    }
    json report{{"result",
                 {{"group", group_block(G)},
                  {"class_count", part.classes.size()},
                  {"classes", classes},
                  {"exists_class_with_C2_equal_G", found}}}};
    finish_report(report, "thompson", opt, timer, true, out);
}

void cmd_identity_scan(const CommonOpts& opt, unsigned max_weight, std::ostream& out) {
    Timer timer;
    GroupTable G = build_group_from(opt);
    auto mats = parse_matrix_literals(opt.constants);
    if (mats.size() != 1)
        throw std::invalid_argument("identity-scan: pass exactly one constant matrix");
    IdentityScanResult res = identity_scan(G, matrix_to_index(G, mats[0]), max_weight,
                                           opt.image_options());
    json report{{"result",
                 {{"group", group_block(G)},
                  {"max_weight", max_weight},
                  {"candidates", res.candidates},
                  {"identities", res.identities},
                  {"note", "finite-model scan; finite-exponent identities such as "
                           "x^{|G|} s x^{-|G|} s^-1 do not model the algebraic-group notion"}}}};
    finish_report(report, "identity-scan", opt, timer, true, out);
}

json rat_vec_json(const RatVec& v) {
    json arr = json::array();
    for (const Rat& x : v)
        arr.push_back(json{{"num", x.get_num().get_str()}, {"den", x.get_den().get_str()}});
    return arr;
}

void cmd_coxeter(const CommonOpts& opt, const std::string& type, int rank,
                 std::vector<int> ordering, bool dump_roots, std::ostream& out) {
    Timer timer;
    RootSystem rs = build_root_system(root_type_from_name(type), rank);
    if (ordering.empty())
        for (int i = 1; i <= rank; ++i)
            ordering.push_back(i);
    WeylElement w = coxeter_element(rs, ordering);
    bool fpf = is_fixed_point_free(rs, w);
    int order = weyl_element_order(rs, w);
    if (opt.format == "csv") {
        std::ostringstream param;
        for (std::size_t i = 0; i < ordering.size(); ++i)
            param << (i ? " " : "") << ordering[i];
        emit_csv_row(opt, root_type_name(rs.type), rs.rank, param.str(),
                     fpf ? "true" : "false", std::to_string(order), out);
        return;
    }
    std::vector<std::string> cp;
    for (const Rat& c : char_poly_on_span(rs, w))
        cp.push_back(c.get_str());
    json result{{"type", root_type_name(rs.type)},
                {"rank", rs.rank},
                {"ordering", ordering},
                {"order", order},
                {"fixed_point_free", fpf},
                {"char_poly_on_span", cp}};
    if (dump_roots) {
        json roots = json::array();
        for (const RatVec& root : rs.roots)
            roots.push_back(rat_vec_json(root));
        result["root_system"] = json{{"dim", rs.dim},
                                     {"roots", roots},
                                     {"simple", rs.simple},
                                     {"positive", rs.positive}};
    }
    json report{{"result", result}};
    finish_report(report, "coxeter", opt, timer, true, out);
}

void cmd_fpf(const CommonOpts& opt, const std::string& type, int rank, bool dcycle,
             std::ostream& out) {
    Timer timer;
    RootSystem rs = build_root_system(root_type_from_name(type), rank);
    WeylElement w;
    std::string element;
    if (dcycle) {
        w = d_type_cycle_element(rs);
        element = "d-cycle";
    } else {
        std::vector<int> ordering;
        for (int i = 1; i <= rank; ++i)
            ordering.push_back(i);
        w = coxeter_element(rs, ordering);
        element = "coxeter";
    }
    bool fpf = is_fixed_point_free(rs, w);
    int order = weyl_element_order(rs, w);
    if (opt.format == "csv") {
        emit_csv_row(opt, root_type_name(rs.type), rs.rank, element, fpf ? "true" : "false",
                     std::to_string(order), out);
        return;
    }
    json report{{"result",
                 {{"type", root_type_name(rs.type)},
                  {"rank", rs.rank},
                  {"element", element},
                  {"order", order},
                  {"fixed_point_free", fpf}}}};
    finish_report(report, "fpf", opt, timer, true, out);
}

void cmd_firm(const CommonOpts& opt, const std::string& type, int rank, int k,
              std::ostream& out) {
    Timer timer;
    FirmReport rep = strictly_firm_parabolic(root_type_from_name(type), rank, k);
    if (opt.format == "csv") {
        std::string witness;
        if (rep.witness)
            for (std::size_t i = 0; i < rep.witness->size(); ++i)
                witness += (i ? " " : "") + (*rep.witness)[i].get_str();
        emit_csv_row(opt, type, rank, std::to_string(k), rep.passes ? "true" : "false",
                     witness, out);
        return;
    }
    json result{{"type", type}, {"rank", rank}, {"k", k}, {"passes", rep.passes}};
    result["witness"] = rep.witness ? rat_vec_json(*rep.witness) : json(nullptr);
    json report{{"result", result}};
    finish_report(report, "firm", opt, timer, true, out);
}

void cmd_power_surj(const CommonOpts& opt, const std::string& type, int rank,
                    const std::string& isogeny, long p, long m, std::ostream& out) {
    Timer timer;
    RootType t = root_type_from_name(type);
    Isogeny iso = Isogeny::Custom;
    long z = 1;
    if (isogeny == "sc" || isogeny == "simply_connected") {
        iso = Isogeny::SimplyConnected;
    } else if (isogeny == "adjoint") {
        iso = Isogeny::Adjoint;
    } else {
        z = parse_long(isogeny);
    }
    bool surjective = power_map_surjective(t, rank, iso, z, p, m);
    IsogenyData data = isogeny_data(t, rank);
    if (opt.format == "csv") {
        emit_csv_row(opt, type, rank, std::to_string(m), surjective ? "true" : "false",
                     isogeny, out);
        return;
    }
    json report{{"result",
                 {{"type", type},
                  {"rank", rank},
                  {"isogeny", isogeny},
                  {"char_exponent", p},
                  {"m", m},
                  {"bad_prime_product", data.bad_prime_product},
                  {"surjective", surjective}}}};
    finish_report(report, "power-surj", opt, timer, true, out);
}

void cmd_ng(const CommonOpts& opt, const std::vector<long>& weights, unsigned m,
            unsigned g_order, std::ostream& out) {
    Timer timer;
    WeightModule module{weights, "cli"};
    NgReport rep = ng_operator_analysis(module, m, g_order);
    json eigen = json::array();
    for (const NgEigenvalue& e : rep.eigenvalues)
        eigen.push_back(json{{"weight", e.weight}, {"value", e.value.to_string()},
                             {"zero", e.zero}});
    json report{{"result",
                 {{"weights", weights},
                  {"m", m},
                  {"g_order", g_order},
                  {"singular", rep.singular},
                  {"kernel_weights", rep.kernel_weights},
                  {"surjective", rep.surjective},
                  {"eigenvalues", eigen}}}};
    finish_report(report, "ng", opt, timer, true, out);
}

int run_single(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

void cmd_batch(const std::string& path, std::ostream& out) {
    std::ifstream file;
    std::istream* in = &std::cin;
    if (path != "-") {
        file.open(path);
        if (!file)
            throw std::invalid_argument("batch: cannot open " + path);
        in = &file;
    }
    std::string line;
    while (std::getline(*in, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos)
            continue;
        json config;
        try {
            config = json::parse(line);
        } catch (const json::parse_error& e) {
            out << json{{"error", std::string("bad config line: ") + e.what()}}.dump() << "\n";
            continue;
        }
        std::vector<std::string> argv;
        try {
            argv.push_back(config.at("cmd").get<std::string>());
            for (auto& [key, value] : config.items()) {
                if (key == "cmd")
                    continue;
                if (value.is_boolean()) {
                    if (value.get<bool>())
                        argv.push_back("--" + key);
                } else if (value.is_array()) {
                    for (auto& v : value) {
                        argv.push_back("--" + key);
                        argv.push_back(v.is_string() ? v.get<std::string>() : v.dump());
                    }
                } else {
                    argv.push_back("--" + key);
                    argv.push_back(value.is_string() ? value.get<std::string>() : value.dump());
                }
            }
        } catch (const json::exception& e) {
            out << json{{"error", std::string("bad config: ") + e.what()}, {"config", config}}.dump()
                << "\n";
            continue;
        }
        std::ostringstream capture;
        std::ostringstream errcap;
        int code = run_single(argv, capture, errcap);
        if (code == kExitOk) {
            out << capture.str();
        } else {
            out << json{{"error", errcap.str()}, {"exit_code", code}, {"config", config}}.dump()
                << "\n";
        }
    }
}

int run_single(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"word map laboratory"};
    app.require_subcommand(1);

    CommonOpts opt;
    if (const char* env = std::getenv("WORDMAP_BUDGET"))
        opt.budget = std::strtoull(env, nullptr, 10);

    std::string type = "A";
    int rank = 1, k = 1;
    long m_long = 1, char_exp = 1;
    unsigned m_unsigned = 1, g_order = 1, max_weight = 4;
    std::string isogeny = "sc";
    std::string batch_path = "-";
    std::vector<int> ordering;
    std::vector<long> weights;
    bool dcycle = false;

    auto* image = app.add_subcommand("image", "exhaustive or sampled word-map image");
    image->add_option("--word", opt.word, "word text, e.g. \"[x,y]\"")->required();
    add_group_flags(image, opt);
    image->add_option("--samples", opt.samples, "sample count (sampled lower bound)");
    image->add_option("--seed", opt.seed, "sampling seed");
    image->add_flag("--dump-image", opt.dump_image, "serialize the image bitset as hex");
    add_run_flags(image, opt);

    auto* imagec = app.add_subcommand("image-const", "image of a word with constants");
    imagec->add_option("--word", opt.word)->required();
    imagec->add_option("--constants", opt.constants, "matrix literals \"a,b;c,d;...\"")->required();
    imagec->add_flag("--relax-central", opt.relax_central, "allow central constants");
    imagec->add_flag("--dump-image", opt.dump_image);
    add_group_flags(imagec, opt);
    add_run_flags(imagec, opt);

    auto* timg = app.add_subcommand("trace-image", "invariant values attained by the word map");
    timg->add_option("--word", opt.word)->required();
    timg->add_option("--constants", opt.constants);
    timg->add_flag("--relax-central", opt.relax_central);
    add_group_flags(timg, opt);
    add_run_flags(timg, opt);

    auto* stats = app.add_subcommand("stats", "image statistics (unipotents, classes, -1)");
    stats->add_option("--word", opt.word)->required();
    add_group_flags(stats, opt);
    add_run_flags(stats, opt);

    auto* magnus = app.add_subcommand("magnus", "Magnus embedding image of a word");
    magnus->add_option("--word", opt.word)->required();
    add_run_flags(magnus, opt);

    auto* primeset = app.add_subcommand("primeset", "prime set S_w of the obstruction polynomial");
    primeset->add_option("--word", opt.word)->required();
    add_run_flags(primeset, opt);

    auto* tpoly = app.add_subcommand("trace-poly", "SL2 trace polynomial Psi(x,y)");
    tpoly->add_option("--word", opt.word)->required();
    tpoly->add_option("--constants", opt.constants, "det-1 integer matrices for x_2..x_n");
    add_run_flags(tpoly, opt);

    auto* counts = app.add_subcommand("counts", "point counts |W_w| and |T_w|");
    counts->add_option("--word", opt.word)->required();
    add_group_flags(counts, opt);
    add_run_flags(counts, opt);

    auto* width = app.add_subcommand("width", "commutator width");
    add_group_flags(width, opt);
    add_run_flags(width, opt);

    auto* covering = app.add_subcommand("covering", "covering and extended covering numbers");
    add_group_flags(covering, opt);
    add_run_flags(covering, opt);

    auto* thompson = app.add_subcommand("thompson", "search PSL2(q) for a class with C^2 = G");
    thompson->add_option("--q", opt.q)->default_val(5);
    thompson->add_option("--modulus", opt.modulus);
    add_run_flags(thompson, opt);

    auto* iscan = app.add_subcommand("identity-scan", "scan short words with one constant");
    iscan->add_option("--constants", opt.constants, "one matrix literal")->required();
    iscan->add_option("--max-weight", max_weight, "total syllable weight bound")->default_val(4);
    add_group_flags(iscan, opt);
    add_run_flags(iscan, opt);

    auto* coxeter = app.add_subcommand("coxeter", "Coxeter element of a root system");
    coxeter->add_option("--type", type, "A,B,C,D,E6,E7,E8,F4,G2")->required();
    coxeter->add_option("--rank", rank)->required();
    coxeter->add_option("--ordering", ordering, "permutation of 1..rank");
    bool dump_roots = false;
    coxeter->add_flag("--dump-roots", dump_roots, "embed the root system (exact rationals)");
    add_run_flags(coxeter, opt);

    auto* fpf = app.add_subcommand("fpf", "fixed-point-freeness of a Weyl element");
    fpf->add_option("--type", type)->required();
    fpf->add_option("--rank", rank)->required();
    fpf->add_flag("--dcycle", dcycle, "use the D-type cycle element instead of a Coxeter element");
    add_run_flags(fpf, opt);

    auto* firm = app.add_subcommand("firm", "strictly-firm criterion for the parabolic P_k");
    firm->add_option("--type", type)->required();
    firm->add_option("--rank", rank)->required();
    firm->add_option("--k", k)->required();
    add_run_flags(firm, opt);

    auto* psurj = app.add_subcommand("power-surj", "power-map surjectivity predicate");
    psurj->add_option("--type", type)->required();
    psurj->add_option("--rank", rank, "rank (fixed for exceptional types)");
    psurj->add_option("--isogeny", isogeny, "sc, adjoint, or a centre order z")->default_val("sc");
    psurj->add_option("--p", char_exp, "characteristic exponent (1 or a prime)")->default_val(1);
    psurj->add_option("--m", m_long, "exponent of the power map")->required();
    add_run_flags(psurj, opt);

    auto* ng = app.add_subcommand("ng", "N_g = 1+g+...+g^{m-1} on a weight module");
    ng->add_option("--weights", weights, "integer weights")->required();
    ng->add_option("--m", m_unsigned)->required();
    ng->add_option("--g-order", g_order)->required();
    add_run_flags(ng, opt);

    auto* batch = app.add_subcommand("batch", "run JSON-lines configs");
    batch->add_option("--file", batch_path, "config file, '-' for stdin")->default_val("-");

    std::vector<std::string> argv = args;
    std::vector<char*> cargv;
    cargv.push_back(const_cast<char*>("wordmap"));
    for (std::string& a : argv)
        cargv.push_back(a.data());
    try {
        app.parse(static_cast<int>(cargv.size()), cargv.data());
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) { // --help
            out << app.help();
            return kExitOk;
        }
        err << e.what() << "\n";
        return kExitInputError;
    }

    // resolved-config echo: every report must be traceable to its inputs
    opt.config_echo = json{{"budget", opt.budget}, {"workers", opt.workers},
                           {"format", opt.format}};
    if (*image || *imagec || *timg || *stats || *counts || *width || *covering || *thompson ||
        *iscan) {
        opt.config_echo["group"] = *thompson ? "psl2" : opt.group;
        opt.config_echo["q"] = opt.q;
        if (!opt.modulus.empty())
            opt.config_echo["modulus"] = opt.modulus;
    }
    if (!opt.word.empty())
        opt.config_echo["word"] = opt.word;
    if (!opt.constants.empty())
        opt.config_echo["constants"] = opt.constants;
    if (opt.samples > 0) {
        opt.config_echo["samples"] = opt.samples;
        opt.config_echo["seed"] = opt.seed;
    }
    if (*coxeter || *fpf || *firm || *psurj) {
        opt.config_echo["type"] = type;
        opt.config_echo["rank"] = rank;
    }
    if (*firm)
        opt.config_echo["k"] = k;
    if (*psurj) {
        opt.config_echo["isogeny"] = isogeny;
        opt.config_echo["p"] = char_exp;
        opt.config_echo["m"] = m_long;
    }
    if (*ng) {
        opt.config_echo["weights"] = weights;
        opt.config_echo["m"] = m_unsigned;
        opt.config_echo["g_order"] = g_order;
    }
    if (*iscan)
        opt.config_echo["max_weight"] = max_weight;

    try {
        if (*image) {
            if (opt.samples > 0 && image->count("--seed") == 0)
                throw std::invalid_argument("image: --seed is required when sampling");
            cmd_image(opt, out);
        } else if (*imagec) {
            cmd_image_const(opt, out);
        } else if (*timg) {
            cmd_trace_image(opt, out);
        } else if (*stats) {
            cmd_stats(opt, out);
        } else if (*magnus) {
            cmd_magnus(opt, out);
        } else if (*primeset) {
            cmd_primeset(opt, out);
        } else if (*tpoly) {
            cmd_trace_poly(opt, out);
        } else if (*counts) {
            cmd_counts(opt, out);
        } else if (*width) {
            cmd_width(opt, out);
        } else if (*covering) {
            cmd_covering(opt, out);
        } else if (*thompson) {
            cmd_thompson(opt, out);
        } else if (*iscan) {
            cmd_identity_scan(opt, max_weight, out);
        } else if (*coxeter) {
            cmd_coxeter(opt, type, rank, ordering, dump_roots, out);
        } else if (*fpf) {
            cmd_fpf(opt, type, rank, dcycle, out);
        } else if (*firm) {
            cmd_firm(opt, type, rank, k, out);
        } else if (*psurj) {
            cmd_power_surj(opt, type, rank, isogeny, char_exp, m_long, out);
        } else if (*ng) {
            cmd_ng(opt, weights, m_unsigned, g_order, out);
        } else if (*batch) {
            cmd_batch(batch_path, out);
        }
    } catch (const BudgetExceeded& e) {
        err << "budget refused: " << e.what() << "\n";
        return kExitBudget;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    return kExitOk;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    return run_single(args, out, err);
}

} // namespace wordmap
