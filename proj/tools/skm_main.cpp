// Command-line front end for the skm library.
//
//   skm homology   --complex F [--sub 1,3 ...]
//   skm koszul     --complex F --i I [--hilbert multi|single] [--betti] [--max-degree D]
//   skm resonance  --complex F --i I [--kind jump|support|both] [--annihilator]
//   skm betti      --complex F --i I
//   skm chen       --complex F [--max-degree D]
//   skm verify     SUITE [--seed S] [--count N]
//   skm examples   [--name NAME]
//
// Exit codes: 0 success, 1 failed verification, 2 usage or input error,
// 3 size guard exceeded.

#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>

#include "skm/homology.hpp"
#include "skm/io.hpp"
#include "skm/koszul.hpp"
#include "skm/parallel.hpp"
#include "skm/resonance.hpp"
#include "skm/verify.hpp"

namespace {

using namespace skm;

struct Options {
    std::string format = "text";
    std::uint64_t seed = CorpusOptions{}.seed;
    int jobs = 0;
    int max_n = 16;
    int max_degree = -1;
    std::string complex_path;
    int i = -1;
    std::vector<std::string> subs;
    std::string hilbert;
    bool betti = false;
    std::string kind = "support";
    bool annihilator = false;
    std::string suite;
    std::size_t count = CorpusOptions{}.count;
    std::string name;
};

bool json_out(const Options& o) { return o.format == "json"; }

void print_json(const Json& j) { std::cout << j.dump(2) << "\n"; }

SimplicialComplex load_checked(const Options& o)
{
    SimplicialComplex delta = load_complex(o.complex_path);
    if (delta.n() > o.max_n)
        throw GuardError("n = " + std::to_string(delta.n()) + " exceeds --max-n " + std::to_string(o.max_n));
    return delta;
}

int require_i(const Options& o, int minimum)
{
    if (o.i < minimum)
        throw InputError("--i must be at least " + std::to_string(minimum));
    return o.i;
}

std::vector<int> parse_id_list(const std::string& text)
{
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty())
            continue;
        try {
            out.push_back(std::stoi(item));
        } catch (const std::exception&) {
            throw InputError("bad vertex id \"" + item + "\" in --sub");
        }
    }
    return out;
}

std::string text_list(const std::vector<std::int64_t>& v)
{
    std::string s = "[";
    for (std::size_t k = 0; k < v.size(); ++k)
        s += (k ? "," : "") + std::to_string(v[k]);
    return s + "]";
}

int cmd_homology(const Options& o)
{
    const SimplicialComplex delta = load_checked(o);
    std::vector<Mask> masks;
    if (o.subs.empty())
        masks.push_back(full_mask(delta.n()));
    for (const auto& s : o.subs)
        masks.push_back(from_vertices(delta.n(), parse_id_list(s)));
    Json results = Json::array();
    for (Mask m : masks) {
        const auto h = reduced_homology(restriction(delta, m));
        if (json_out(o)) {
            Json entry = to_json(h);
            entry["subset"] = vertices_json(m);
            results.push_back(entry);
        } else {
            std::cout << "subset " << format_set(m) << ":";
            for (int k = -1; k <= h.top_degree(); ++k)
                std::cout << " h" << k << "=" << h(k);
            std::cout << "\n";
        }
    }
    if (json_out(o))
        print_json(Json{{"profiles", results}});
    return 0;
}

Json betti_json_and_text(const BettiTable& t, bool text)
{
    if (text) {
        if (t.is_zero()) {
            std::cout << "zero module (reg -inf, pdim -1)\n";
        } else {
            for (const auto& [key, beta] : t.entries)
                std::cout << "beta_" << key.first << "," << format_set(key.second) << " = " << beta << "\n";
            std::cout << "reg " << *t.regularity() << "\npdim " << t.projective_dimension() << "\n";
        }
    }
    return to_json(t);
}

int cmd_koszul(const Options& o, bool betti_only)
{
    const SimplicialComplex delta = load_checked(o);
    const int i = require_i(o, 0);
    const int max_degree = o.max_degree >= 0 ? o.max_degree : 2 * delta.n();
    Json out = Json::object();
    const bool text = !json_out(o);
    const std::string hilbert = betti_only ? "" : (o.hilbert.empty() && !o.betti ? "multi" : o.hilbert);
    if (!hilbert.empty()) {
        const auto series = hilbert_series_combinatorial(delta, i, o.jobs, o.max_n);
        if (hilbert == "multi") {
            out["hilbert"] = to_json(series);
            if (text) {
                if (series.is_zero())
                    std::cout << "zero module\n";
                for (const auto& [b, c] : series.terms)
                    std::cout << "support " << format_set(b) << " coeff " << c << "\n";
            }
        } else {
            const auto single = specialize_single(series, max_degree);
            out["hilbert_single"] = single;
            if (text)
                std::cout << "dims by degree 0.." << max_degree << ": " << text_list(single) << "\n";
        }
    }
    if (betti_only || o.betti) {
        const BettiTable t = betti_table(build_W(delta, i, o.jobs, o.max_n), o.jobs);
        out["betti"] = betti_json_and_text(t, text);
    }
    if (!text)
        print_json(betti_only ? out["betti"] : out);
    return 0;
}

int cmd_resonance(const Options& o)
{
    const SimplicialComplex delta = load_checked(o);
    const int i = require_i(o, 0);
    if (o.kind != "jump" && o.kind != "support" && o.kind != "both")
        throw InputError("--kind must be jump, support or both");
    Json out{{"kind", o.kind}};
    auto emit = [&](const char* key, const CoordinateSubspaceArrangement& a) {
        const Json j = to_json(a);
        if (o.kind == "both")
            out[key] = j;
        else
            for (const auto& [k, v] : j.items())
                out[k] = v;
        if (!json_out(o))
            std::cout << key << " resonance (i=" << i << "): " << a.describe() << "\n";
    };
    if (o.kind == "support" || o.kind == "both")
        emit("support", support_resonance(delta, require_i(o, 1)));
    if (o.kind == "jump" || o.kind == "both")
        emit("jump", jump_resonance(delta, i));
    if (o.annihilator) {
        const auto ann = annihilator(delta, require_i(o, 1));
        out["annihilator"] = to_json(ann);
        if (!json_out(o)) {
            std::cout << "annihilator generators:";
            if (ann.is_zero())
                std::cout << " (zero ideal)";
            for (Mask g : ann.generators())
                std::cout << " " << format_set(g);
            std::cout << "\n";
        }
    }
    if (json_out(o))
        print_json(out);
    return 0;
}

int cmd_chen(const Options& o)
{
    const SimplicialComplex delta = load_checked(o);
    const int max_degree = o.max_degree >= 0 ? o.max_degree : 2 * delta.n();
    const ChenRanks c = chen_ranks(delta, max_degree);
    if (json_out(o)) {
        print_json(Json{{"q_coefficients", c.q_coefficients}, {"hilbert", c.hilbert}, {"shift", 2}});
    } else {
        std::cout << "Q coefficients (t^0..t^n): " << text_list(c.q_coefficients) << "\n"
                  << "Hilbert function of W_1 shifted by 2, degrees 0.." << max_degree << ": " << text_list(c.hilbert)
                  << "\n";
    }
    return 0;
}

int cmd_verify(const Options& o)
{
    SuiteOptions so;
    so.corpus.seed = o.seed;
    so.corpus.count = o.count;
    so.jobs = o.jobs;
    const VerificationReport r = run_suite(o.suite, so);
    if (json_out(o))
        print_json(r.to_json());
    else
        std::cout << r.to_text();
    return r.ok() ? 0 : 1;
}

const std::map<std::string, SimplicialComplex>& named_examples()
{
    static const std::map<std::string, SimplicialComplex> m{
        {"path4", SimplicialComplex::path(4)},
        {"c4", SimplicialComplex::cycle(4)},
        {"two-edges", two_edges()},
        {"tetra-minus-face", tetrahedron_minus_face()},
        {"sphere3", SimplicialComplex::simplex_boundary(4)},
    };
    return m;
}

int cmd_examples(const Options& o)
{
    const auto& ex = named_examples();
    if (o.name.empty()) {
        if (json_out(o)) {
            Json all = Json::object();
            for (const auto& [name, delta] : ex)
                all[name] = complex_to_json(delta);
            print_json(all);
        } else {
            for (const auto& [name, delta] : ex)
                std::cout << name << "\n";
        }
        return 0;
    }
    const auto it = ex.find(o.name);
    if (it == ex.end())
        throw InputError("unknown example \"" + o.name + "\"");
    if (json_out(o))
        print_json(complex_to_json(it->second));
    else
        std::cout << complex_to_text(it->second);
    return 0;
}

} // namespace

int main(int argc, char** argv)
{
    Options o;
    CLI::App app{"Koszul modules, resonance and Betti data of simplicial complexes"};
    app.require_subcommand(1);
    app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--seed", o.seed, "Seed for randomized suites");
    app.add_option("--jobs", o.jobs, "Worker threads (default: KOSZUL_JOBS or 1)");
    app.add_option("--max-n", o.max_n, "Largest n accepted by all-subsets commands")->check(CLI::Range(1, kDefaultSubsetGuard));
    app.add_option("--max-degree", o.max_degree, "Largest degree for Hilbert functions (default 2n)");

    auto add_complex = [&](CLI::App* sub) { sub->add_option("--complex", o.complex_path, "Complex file")->required(); };
    auto add_i = [&](CLI::App* sub, bool required) {
        auto* opt = sub->add_option("--i", o.i, "Weight / cohomological degree");
        if (required)
            opt->required();
    };

    auto* homology = app.add_subcommand("homology", "Reduced homology of the complex or induced subcomplexes");
    add_complex(homology);
    homology->add_option("--sub", o.subs, "Vertex subset like 1,3 (repeatable)");

    auto* koszul = app.add_subcommand("koszul", "Hilbert series and Betti table of W_i");
    add_complex(koszul);
    add_i(koszul, true);
    koszul->add_option("--hilbert", o.hilbert, "multi or single")->check(CLI::IsMember({"multi", "single"}));
    koszul->add_flag("--betti", o.betti, "Also compute the Betti table");

    auto* resonance = app.add_subcommand("resonance", "Jump or support resonance");
    add_complex(resonance);
    add_i(resonance, true);
    resonance->add_option("--kind", o.kind, "jump, support or both");
    resonance->add_flag("--annihilator", o.annihilator, "Also print Ann(W_i)");

    auto* betti = app.add_subcommand("betti", "Betti table, regularity and projective dimension of W_i");
    add_complex(betti);
    add_i(betti, true);

    auto* chen = app.add_subcommand("chen", "Chen ranks of a graph");
    add_complex(chen);

    auto* verify = app.add_subcommand("verify", "Run a verification suite");
    verify->add_option("suite", o.suite, "Suite name")->required()->check(CLI::IsMember(suite_names()));
    verify->add_option("--count", o.count, "Number of random complexes");

    auto* examples = app.add_subcommand("examples", "Print built-in example complexes");
    examples->add_option("--name", o.name, "Example name");

    for (auto* sub : {homology, koszul, resonance, betti, chen, verify, examples}) {
        sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
        sub->add_option("--seed", o.seed, "Seed for randomized suites");
        sub->add_option("--jobs", o.jobs, "Worker threads");
        sub->add_option("--max-n", o.max_n, "Largest n for all-subsets commands")->check(CLI::Range(1, kDefaultSubsetGuard));
        sub->add_option("--max-degree", o.max_degree, "Largest degree for Hilbert functions");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (o.jobs > 0)
            set_default_jobs(o.jobs);
        if (*homology)
            return cmd_homology(o);
        if (*koszul)
            return cmd_koszul(o, false);
        if (*resonance)
            return cmd_resonance(o);
        if (*betti)
            return cmd_koszul(o, true);
        if (*chen)
            return cmd_chen(o);
        if (*verify)
            return cmd_verify(o);
        if (*examples)
            return cmd_examples(o);
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const GuardError& e) {
        std::cerr << "guard: " << e.what() << "\n";
        return 3;
    } catch (const OracleError& e) {
        std::cerr << "verification failure: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
