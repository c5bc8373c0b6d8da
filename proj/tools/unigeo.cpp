#include <cstdio>
#include <cstdlib>
#include <functional>
#include <string>

#include <CLI11.hpp>

#include <unigeo/tasks.hpp>

using namespace unigeo;

namespace {

struct Output {
    bool json{false};
    bool quiet{false};
};

int emit(const Report& r, const Output& out) {
    if (!out.quiet)
        std::fputs((out.json ? render_json(r) : render_text(r)).c_str(), stdout);
    return r.ok ? 0 : 1;
}

// Exit 2 marks problems with the inputs themselves (scene, field choice,
// literals); exit 1 marks failures while executing a well-formed request.
int classify(const Error& e) {
    switch (e.code()) {
        case ErrorCode::SceneError:
        case ErrorCode::ParseError:
        case ErrorCode::NonPrimeModulus:
        case ErrorCode::CharacteristicTwo:
        case ErrorCode::UnsupportedField:
        case ErrorCode::InexactField:
            return 2;
        default:
            return 1;
    }
}

std::uint64_t seed_from_env() {
    const char* env = std::getenv("UNIGEO_SEED");
    if (!env || !*env)
        return 1;
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end == env || *end != '\0')
        throw Error(ErrorCode::SceneError, "UNIGEO_SEED must be an unsigned integer");
    return v;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact trigonometry over arbitrary symmetric bilinear forms"};
    app.require_subcommand(1);

    Output out;
    app.add_flag("--json", out.json, "emit the report as JSON");
    app.add_flag("--quiet", out.quiet, "suppress the report body");

    std::string scene_path, vertex, eval_at, field_str = "rational", q_str, p_str;
    int poly_n = 0, cyc_k = 1, fuzz_count = 200;
    std::uint64_t seed = 0;
    double tol = 1e-9;
    std::function<Report()> runner;

    auto scene_sub = [&](const char* name, const char* desc, auto&& make_runner) {
        auto* sub = app.add_subcommand(name, desc);
        sub->fallthrough();
        sub->add_option("--scene", scene_path, "scene file (JSON)")->required();
        sub->callback([&app, &runner, make_runner] { runner = make_runner; });
        return sub;
    };

    scene_sub("affine-triangle", "quadrances, spreads, laws, and centers of an affine triangle",
              [&] { return run_affine_triangle(load_scene_file(scene_path)); });
    scene_sub("projective-triangle", "quadrances, spreads, quadrea, laws, and orthocenter",
              [&] { return run_projective_triangle(load_scene_file(scene_path)); });
    scene_sub("solve-right", "complete a right triangle from two known quantities",
              [&] { return run_solve_right(load_scene_file(scene_path)); });
    scene_sub("hexagon", "alternating side-quadrance ratios of a right hexagon",
              [&] { return run_hexagon(load_scene_file(scene_path)); });
    scene_sub("verify", "run every law suite the scene supports",
              [&] { return run_verify(load_scene_file(scene_path)); });

    {
        auto* sub = scene_sub("bisectors", "points whose cevian halves the vertex spread", [&] {
            auto s = load_scene_file(scene_path);
            if (!vertex.empty())
                s.vertex = vertex;
            return run_bisectors(s);
        });
        sub->add_option("--vertex", vertex, "apex vertex name (default: all three)");
    }
    {
        auto* sub = scene_sub("hyperbolic-demo", "disk model bridge: distances, angles, residuals",
                              [&] { return run_hyperbolic(load_scene_file(scene_path), tol); });
        sub->add_option("--tol", tol, "residual tolerance")->capture_default_str();
    }
    {
        auto* sub = app.add_subcommand("lambert", "quadrilateral with three right spreads");
        sub->fallthrough();
        sub->add_option("--scene", scene_path, "scene file with values.q and values.p");
        sub->add_option("--q", q_str, "first base quadrance");
        sub->add_option("--p", p_str, "second base quadrance");
        sub->add_option("--field", field_str, "field when no scene is given")->capture_default_str();
        sub->callback([&] {
            runner = [&] {
                Scene s;
                if (!scene_path.empty())
                    s = load_scene_file(scene_path);
                else
                    s.field = FieldDescriptor::parse(field_str);
                if (!q_str.empty())
                    s.values["q"] = q_str;
                if (!p_str.empty())
                    s.values["p"] = p_str;
                return run_lambert(s);
            };
        });
    }
    {
        auto* sub = app.add_subcommand("spread-poly", "n-th spread polynomial, optionally evaluated");
        sub->fallthrough();
        sub->add_option("--n", poly_n, "index")->required();
        sub->add_option("--eval", eval_at, "evaluate at this scalar");
        sub->add_option("--field", field_str, "field for evaluation")->capture_default_str();
        sub->callback([&] {
            runner = [&] { return run_spread_poly_task(poly_n, eval_at, FieldDescriptor::parse(field_str)); };
        });
    }
    {
        auto* sub = app.add_subcommand("cyclotomic", "k-th spread cyclotomic factor");
        sub->fallthrough();
        sub->add_option("--k", cyc_k, "index")->required();
        sub->callback([&] { runner = [&] { return run_cyclotomic_task(cyc_k); }; });
    }
    {
        auto* sub = app.add_subcommand("fuzz", "randomized law checking over an exact field");
        sub->fallthrough();
        sub->add_option("--seed", seed, "RNG seed (default: UNIGEO_SEED or 1)");
        sub->add_option("--count", fuzz_count, "iterations")->capture_default_str();
        sub->add_option("--field", field_str, "field to fuzz")->capture_default_str();
        sub->callback([&] {
            runner = [&] {
                std::uint64_t s = seed ? seed : seed_from_env();
                return run_fuzz_task(FieldDescriptor::parse(field_str), s, fuzz_count);
            };
        });
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
        return emit(runner(), out);
    } catch (const Error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return classify(e);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
}
