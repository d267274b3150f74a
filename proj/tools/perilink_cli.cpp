#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "perilink/engine.hpp"
#include "perilink/serialize.hpp"

using namespace perilink;

namespace {

constexpr int kOk = 0;
constexpr int kAssertionFailed = 1;
constexpr int kUsage = 2;

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Config {
    Int p = 3;
    std::size_t n = 2;
    std::string mode = "nonstrict";
    Int excursion_cap = -1;
    std::size_t budget = 200'000;
    std::string cache_path;

    void validate() const {
        if (!is_odd_prime(p)) throw UsageError("--p must be an odd prime");
        if (n < 2) throw UsageError("--n must be at least 2");
        if (budget < 1) throw UsageError("--budget must be at least 1");
        mode_from_name(mode);
    }
    EligibilityMode eligibility() const { return mode_from_name(mode); }
};

void emit(const Json& j) { std::cout << j.dump() << '\n'; }

Weight weight_arg(const std::vector<Int>& entries) {
    if (entries.size() < 2) throw UsageError("a weight needs at least two entries after --");
    return Weight(entries);
}

Weight dominant_arg(const std::vector<Int>& entries) {
    Weight w = weight_arg(entries);
    if (!is_dominant(w)) throw UsageError("weight " + w.to_string() + " is not dominant");
    return w;
}

int parity_arg(int parity) {
    if (parity != 0 && parity != 1) throw UsageError("--parity must be 0 or 1");
    return parity;
}

Json read_json_input(const std::string& path) {
    std::stringstream buffer;
    if (path.empty() || path == "-") {
        buffer << std::cin.rdbuf();
    } else {
        std::ifstream in(path);
        if (!in) throw UsageError("cannot read " + path);
        buffer << in.rdbuf();
    }
    try {
        return Json::parse(buffer.str());
    } catch (const nlohmann::json::exception& e) {
        throw UsageError(std::string("input is not JSON: ") + e.what());
    }
}

// Loads the persistent Jantzen cache named by --cache or PERILINK_CACHE.
class CacheScope {
public:
    explicit CacheScope(const Config& cfg) {
        path_ = cfg.cache_path;
        if (path_.empty())
            if (const char* env = std::getenv("PERILINK_CACHE")) path_ = env;
        if (!path_.empty()) cache_.load(path_);
    }
    ~CacheScope() {
        if (path_.empty()) return;
        try {
            cache_.save(path_);
        } catch (const std::exception& e) {
            std::cerr << "warning: " << e.what() << '\n';
        }
    }
    IrreducibilityCache* get() { return &cache_; }

private:
    std::string path_;
    IrreducibilityCache cache_;
};

SearchOptions search_options(const Config& cfg, IrreducibilityCache* cache) {
    SearchOptions o;
    o.p = cfg.p;
    o.mode = cfg.eligibility();
    o.budget = cfg.budget;
    o.excursion_cap = cfg.excursion_cap;
    o.cache = cache;
    return o;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Linkage certificates for the periplectic supergroup P(n) in odd characteristic"};
    app.require_subcommand(1);
    Config cfg;
    std::vector<Int> entries;
    int parity = 0;
    std::size_t ri = 0, rj = 0;
    Int rk = 0;
    Int lo = -2, hi = 2;
    bool serial = false;
    std::string dot_path, input_path, recipe;
    Int a = 0;
    std::size_t recipe_i = 0;
    bool grid = false;

    auto common = [&](CLI::App* sub, bool with_weight) {
        sub->add_option("--p", cfg.p, "odd prime")->required();
        sub->add_option("--mode", cfg.mode, "eligibility mode: nonstrict or strict");
        sub->add_option("--cache", cfg.cache_path, "Jantzen cache file (JSON lines)");
        if (with_weight) sub->add_option("entries", entries, "weight entries, after --")->required();
    };

    auto* defect_cmd = app.add_subcommand("defect", "p-adic defect of a weight");
    common(defect_cmd, true);
    auto* jantzen_cmd = app.add_subcommand("jantzen", "irreducibility verdict with failing pairs");
    common(jantzen_cmd, true);
    auto* f0_cmd = app.add_subcommand("f0", "odd-move eligibility");
    common(f0_cmd, true);
    auto* linked_cmd = app.add_subcommand("even-linked", "even linkage of two weights given back to back");
    common(linked_cmd, true);
    auto* reflect_cmd = app.add_subcommand("reflect", "dot action of an affine reflection");
    common(reflect_cmd, true);
    reflect_cmd->add_option("--i", ri)->required();
    reflect_cmd->add_option("--j", rj)->required();
    reflect_cmd->add_option("--k", rk)->required();
    auto* gf_cmd = app.add_subcommand("good-filtration", "dominant weights w + e_i + e_j");
    gf_cmd->add_option("entries", entries, "weight entries, after --")->required();
    auto* nb_cmd = app.add_subcommand("neighbors", "single-step linkage moves");
    common(nb_cmd, true);
    nb_cmd->add_option("--parity", parity);
    nb_cmd->add_option("--excursion-cap", cfg.excursion_cap);
    auto* reduce_cmd = app.add_subcommand("reduce", "certificate to the canonical representative");
    common(reduce_cmd, true);
    reduce_cmd->add_option("--parity", parity);
    reduce_cmd->add_option("--budget", cfg.budget);
    reduce_cmd->add_option("--excursion-cap", cfg.excursion_cap);
    auto* census_cmd = app.add_subcommand("block-census", "reduce every weight of a box");
    common(census_cmd, false);
    census_cmd->add_option("--n", cfg.n)->required();
    census_cmd->add_option("--lo", lo);
    census_cmd->add_option("--hi", hi);
    census_cmd->add_option("--budget", cfg.budget);
    census_cmd->add_option("--excursion-cap", cfg.excursion_cap);
    census_cmd->add_flag("--serial", serial, "single-threaded reference run");
    census_cmd->add_option("--dot", dot_path, "also write the box move graph here");
    auto* verify_cmd = app.add_subcommand("verify-chain", "replay a certificate from a file or stdin");
    verify_cmd->add_option("file", input_path, "certificate JSON; - for stdin");
    auto* replay_cmd = app.add_subcommand("replay", "run a scripted recipe, or the whole grid");
    replay_cmd->add_option("--recipe", recipe);
    replay_cmd->add_option("--a", a);
    replay_cmd->add_option("--i", recipe_i);
    replay_cmd->add_option("--n", cfg.n);
    replay_cmd->add_option("--p", cfg.p);
    replay_cmd->add_option("--mode", cfg.mode);
    replay_cmd->add_flag("--grid", grid, "a in [-2,2], n in [2,7], p in {3,5,7}");
    replay_cmd->add_flag("--serial", serial, "single-threaded grid run");
    auto* graph_cmd = app.add_subcommand("graph", "DOT export of the move graph on a box");
    common(graph_cmd, false);
    graph_cmd->add_option("--n", cfg.n)->required();
    graph_cmd->add_option("--lo", lo);
    graph_cmd->add_option("--hi", hi);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        cfg.validate();
        CacheScope cache(cfg);
        const LinkageContext ctx{cfg.p, cfg.eligibility(), cfg.excursion_cap, cache.get()};

        if (*defect_cmd) {
            const Weight w = weight_arg(entries);
            try {
                emit(Json{{"defect", defect(w, cfg.p)}});
            } catch (const std::domain_error&) {
                emit(Json{{"defect", nullptr}, {"unbounded", true}});
            }
            return kOk;
        }
        if (*jantzen_cmd) {
            const auto v = even_irreducible(dominant_arg(entries), cfg.p);
            std::cerr << (v.irreducible ? "irreducible" : "reducible") << '\n';
            emit(to_json(v));
            return kOk;
        }
        if (*f0_cmd) {
            const Weight w = dominant_arg(entries);
            const auto screen = fast_f0_screen(w, cfg.p);
            emit(Json{{"f0", f0_member(w, cfg.p, cfg.eligibility(), cache.get())},
                      {"defect_zero", [&]() -> Json {
                           try {
                               return defect(w, cfg.p) == 0;
                           } catch (const std::domain_error&) {
                               return false;
                           }
                       }()},
                      {"screen", screen ? Json(*screen) : Json()}});
            return kOk;
        }
        if (*linked_cmd) {
            if (entries.size() % 2 != 0) throw UsageError("even-linked needs two weights of equal rank");
            const std::size_t half = entries.size() / 2;
            const Weight x = dominant_arg({entries.begin(), entries.begin() + static_cast<std::ptrdiff_t>(half)});
            const Weight y = dominant_arg({entries.begin() + static_cast<std::ptrdiff_t>(half), entries.end()});
            emit(Json{{"even_linked", even_linked(x, y, cfg.p)}});
            return kOk;
        }
        if (*reflect_cmd) {
            const Weight w = weight_arg(entries);
            const Reflection r{ri, rj, rk};
            try {
                check_reflection(r, w.rank());
            } catch (const std::out_of_range& e) {
                throw UsageError(e.what());
            }
            emit(to_json(dot_reflect(w, r, cfg.p)));
            return kOk;
        }
        if (*gf_cmd) {
            Json out = Json::array();
            for (const Weight& x : good_filtration_factors(weight_arg(entries))) out.push_back(to_json(x));
            emit(out);
            return kOk;
        }
        if (*nb_cmd) {
            Json out = Json::array();
            const ParityWeight pw(dominant_arg(entries), parity_arg(parity));
            for (const auto& nb : neighbors(pw, ctx))
                out.push_back(Json{{"target", to_json(nb.target)}, {"move", to_json(nb.move)}});
            emit(out);
            return kOk;
        }
        if (*reduce_cmd) {
            const ParityWeight pw(dominant_arg(entries), parity_arg(parity));
            try {
                const Certificate c = reduce(pw, search_options(cfg, cache.get()));
                std::cerr << pw.to_string() << " -> " << c.end.to_string() << " in " << c.steps.size() << " steps\n";
                emit(to_json(c));
                return kOk;
            } catch (const BudgetExhausted& e) {
                std::cerr << e.what() << '\n';
                emit(Json{{"error", "BudgetExhausted"}, {"start", to_json(e.start())}, {"expanded", e.expanded()}});
                return kAssertionFailed;
            }
        }
        if (*census_cmd) {
            if (lo > -1 || hi < 0) throw UsageError("census box must contain -1 and 0");
            const SearchOptions o = search_options(cfg, cache.get());
            try {
                const CensusReport report = serial ? block_census_serial(cfg.n, o, lo, hi) : block_census(cfg.n, o, lo, hi);
                bool verified = true;
                for (const auto& row : report.rows) verified = verified && verify_certificate(row.certificate).ok;
                if (!dot_path.empty()) {
                    std::ofstream dot(dot_path);
                    dot << to_dot(move_graph_in_box(cfg.n, cfg.p, lo, hi, cfg.eligibility(), cache.get()));
                }
                const bool ok = verified && report.four_blocks();
                std::cerr << report.rows.size() << " rows, " << report.representatives.size() << " representatives, "
                          << (ok ? "four blocks" : "ASSERTION FAILED") << '\n';
                emit(to_json(report));
                return ok ? kOk : kAssertionFailed;
            } catch (const BudgetExhausted& e) {
                std::cerr << e.what() << '\n';
                emit(Json{{"error", "BudgetExhausted"}, {"start", to_json(e.start())}, {"expanded", e.expanded()}});
                return kAssertionFailed;
            }
        }
        if (*verify_cmd) {
            const Certificate c = certificate_from_json(read_json_input(input_path));
            const Verification v = verify_certificate(c);
            std::cerr << (v.ok ? "certificate verifies" : "certificate rejected: " + v.reason) << '\n';
            emit(to_json(v));
            return v.ok ? kOk : kAssertionFailed;
        }
        if (*replay_cmd) {
            if (grid) {
                const RecipeReport report =
                    serial ? verify_all_recipes_serial(RecipeGrid::standard(), cfg.eligibility())
                           : verify_all_recipes(RecipeGrid::standard(), cfg.eligibility());
                std::cerr << report.rows.size() << " recipe runs, " << report.failures() << " failures\n";
                emit(to_json(report));
                return report.failures() == 0 ? kOk : kAssertionFailed;
            }
            if (recipe.empty()) throw UsageError("replay needs --recipe or --grid");
            const RecipeId id = recipe_from_name(recipe);
            const RecipeParams params{a, recipe_i, cfg.n, cfg.p};
            if (auto clause = hypothesis_failure(id, params)) throw UsageError(HypothesisViolated(id, *clause).what());
            const RecipeRow row = check_recipe(id, params, cfg.eligibility(), cache.get());
            if (row.status == RecipeStatus::succeeded) {
                emit(to_json(*row.certificate));
                return kOk;
            }
            std::cerr << status_name(row.status) << ": " << row.detail << '\n';
            emit(to_json(row));
            return kAssertionFailed;
        }
        if (*graph_cmd) {
            if (lo > hi) throw UsageError("--lo must not exceed --hi");
            std::cout << to_dot(move_graph_in_box(cfg.n, cfg.p, lo, hi, cfg.eligibility(), cache.get()));
            return kOk;
        }
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kAssertionFailed;
    }
    return kUsage;
}
