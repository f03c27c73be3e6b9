#include <pmshape/cli.hpp>

#include <pmshape/bandwidth.hpp>
#include <pmshape/error.hpp>
#include <pmshape/experiments.hpp>
#include <pmshape/fixtures.hpp>
#include <pmshape/grey.hpp>
#include <pmshape/io.hpp>
#include <pmshape/pma.hpp>
#include <pmshape/shape_core.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <ostream>

namespace pmshape {

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

json to_json(Complex z) { return json::array({z.real(), z.imag()}); }

json to_json(std::span<const Complex> values) {
    json out = json::array();
    for (const Complex& z : values) out.push_back(to_json(z));
    return out;
}

json to_json(const OrientationEstimate& est) {
    json pairs = json::array();
    for (const auto& p : est.pairs)
        pairs.push_back({{"k", p.k}, {"m", p.m}, {"l", p.l}, {"theta", p.theta}, {"weight", p.weight}});
    return {{"theta", est.theta}, {"gamma", est.gamma}, {"orders", est.orders}, {"pairs", pairs}};
}

const std::map<std::string, Conditioning> kConditioningNames{
    {"principal", Conditioning::PrincipalMoment},
    {"power", Conditioning::PowerNormalized},
    {"growth", Conditioning::ExpectedGrowth},
};

// Output goes to a file when a path is given, else to the command's stream.
void emit(const std::string& path, std::ostream& fallback, const std::function<void(std::ostream&)>& write) {
    if (path.empty()) {
        write(fallback);
        return;
    }
    std::ofstream file(path);
    if (!file) throw Error(ErrorKind::Parse, "cannot write " + path);
    write(file);
}

struct PmaFlags {
    double tau = PmaOptions{}.threshold;
    int max_order = PmaOptions{}.max_order;
    Conditioning conditioning = PmaOptions{}.conditioning;

    void attach(CLI::App* cmd) {
        cmd->add_option("--tau", tau, "threshold on conditioned moment magnitudes")
            ->check(CLI::NonNegativeNumber)
            ->capture_default_str();
        cmd->add_option("--max-order", max_order, "highest moment order used for orientation")
            ->check(CLI::Range(1, 200))
            ->capture_default_str();
        cmd->add_option("--conditioning", conditioning, "principal | power | growth")
            ->transform(CLI::CheckedTransformer(kConditioningNames, CLI::ignore_case));
    }
    [[nodiscard]] PmaOptions options() const { return {max_order, tau, conditioning}; }
};

std::vector<LabeledShape> load_prototypes(const fs::path& dir) {
    if (!fs::is_directory(dir)) throw Error(ErrorKind::Parse, "not a directory: " + dir.string());
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(dir))
        if (entry.is_regular_file() && entry.path().extension() == ".txt") files.push_back(entry.path());
    std::sort(files.begin(), files.end());
    if (files.empty()) throw Error(ErrorKind::Parse, "no .txt prototypes in " + dir.string());
    std::vector<LabeledShape> out;
    for (const auto& f : files) out.push_back({f.stem().string(), io::read_landmarks(f)});
    return out;
}

std::optional<ShapeVector> landmark_fixture(const std::string& name) {
    if (name == "five-point") return fixtures::five_point_cm_counterexample();
    if (name == "two-fold") return fixtures::two_fold_cm_counterexample();
    if (name == "three-point") return fixtures::gc_counterexample();
    if (name == "seven") return fixtures::seven_landmarks();
    if (name == "elongated") return fixtures::elongated_contour();
    if (name == "three-fold") return fixtures::three_fold_contour();
    return std::nullopt;
}

std::optional<GreyImage> image_fixture(const std::string& name) {
    if (name == "degenerate") {
        // Rescaled into [0, 1] for PGM storage; a positive factor leaves the spectrum's support alone.
        const auto img = fixtures::degenerate_spectrum_image();
        std::vector<double> v(img.intensities().begin(), img.intensities().end());
        for (auto& x : v) x *= kPi / 4.0;
        return GreyImage(img.width(), img.height(), std::move(v), img.pitch());
    }
    if (name == "blobs") return fixtures::asymmetric_blobs();
    if (name == "disc") return fixtures::uniform_disc();
    return std::nullopt;
}

int report(std::ostream& err, const Error& e) {
    err << "error: " << to_string(e.kind()) << ": " << e.what() << '\n';
    return e.kind() == ErrorKind::InvalidArgument ? kExitUsage : kExitData;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Principal Moments of unlabeled 2D point sets and grey-level images", "pmshape"};
    app.require_subcommand(1);
    std::function<void()> action;

    // moments
    std::string moments_file;
    int moments_k = 5;
    bool moments_raw = false;
    auto* moments = app.add_subcommand("moments", "power sums and Principal Moments of a landmark file");
    moments->add_option("file", moments_file, "landmark file")->required();
    moments->add_option("--k", moments_k, "highest order")->check(CLI::Range(1, 170))->capture_default_str();
    moments->add_flag("--raw", moments_raw, "skip translation/scale normalization");
    moments->callback([&] {
        action = [&] {
            const auto z = io::read_landmarks(moments_file);
            const ShapeVector s = moments_raw ? z : normalize_shape(z).shape();
            out << json{{"n", s.size()},
                        {"normalized", !moments_raw},
                        {"power_sums", to_json(power_sums(s, moments_k).values())},
                        {"principal_moments", to_json(principal_moments(s, moments_k).values())}}
                       .dump(2)
                << '\n';
        };
    });

    // orient
    std::string orient_file;
    PmaFlags orient_flags;
    auto* orient = app.add_subcommand("orient", "PMA orientation of a landmark file");
    orient->add_option("file", orient_file, "landmark file")->required();
    orient_flags.attach(orient);
    orient->callback([&] {
        action = [&] {
            out << to_json(orientation(io::read_landmarks(orient_file), orient_flags.options())).dump(2) << '\n';
        };
    });

    // normalize
    std::string normalize_file;
    std::string normalize_out;
    PmaFlags normalize_flags;
    auto* normalize = app.add_subcommand("normalize", "write the translation/scale/rotation normalized shape");
    normalize->add_option("file", normalize_file, "landmark file")->required();
    normalize->add_option("-o,--output", normalize_out, "output landmark file (default: standard output)");
    normalize_flags.attach(normalize);
    normalize->callback([&] {
        action = [&] {
            const auto w = normalize_shape(io::read_landmarks(normalize_file));
            const auto est = orientation(w, normalize_flags.options());
            const auto oriented = w.rotated(-est.theta);
            emit(normalize_out, out, [&](std::ostream& s) { io::write_landmarks(s, oriented.landmarks()); });
            if (!normalize_out.empty())
                out << json{{"theta", est.theta}, {"gamma", est.gamma}, {"output", normalize_out}}.dump(2) << '\n';
        };
    });

    // kb
    int kb_n = 0;
    double kb_p = 0.1;
    auto* kb = app.add_subcommand("kb", "bandwidth k_B for N landmarks at relative threshold p");
    kb->add_option("--n", kb_n, "landmark count")->required()->check(CLI::Range(2, 1 << 30));
    kb->add_option("--p", kb_p, "relative threshold in (0, 1)")->capture_default_str();
    kb->callback([&] {
        action = [&] {
            const auto r = solve_kb(kb_n, kb_p);
            out << json{{"n", r.n}, {"p", r.p}, {"k2", r.k2}, {"kb", r.kb}}.dump(2) << '\n';
        };
    });

    // descriptor
    std::string descriptor_file;
    double descriptor_p = 0.1;
    PmaFlags descriptor_flags;
    auto* descriptor = app.add_subcommand("descriptor", "compact descriptor M_0..M_{kB-1} of the oriented shape");
    descriptor->add_option("file", descriptor_file, "landmark file")->required();
    descriptor->add_option("--p", descriptor_p, "relative threshold in (0, 1)")->capture_default_str();
    descriptor_flags.attach(descriptor);
    descriptor->callback([&] {
        action = [&] {
            const auto entry = prepare_entry(io::read_landmarks(descriptor_file), descriptor_p,
                                             descriptor_flags.options());
            const auto& d = entry.descriptor;
            out << json{{"n", d.n},
                        {"p", d.p},
                        {"kb", d.coefficients.size()},
                        {"oriented", entry.oriented},
                        {"coefficients", to_json(d.coefficients)}}
                       .dump(2)
                << '\n';
        };
    });

    // classify
    std::string classify_file;
    std::string classify_dir;
    double classify_p = 0.1;
    PmaFlags classify_flags;
    auto* classify = app.add_subcommand("classify", "1-NN label of a shape against a prototype directory");
    classify->add_option("file", classify_file, "query landmark file")->required();
    classify->add_option("--prototypes", classify_dir, "directory of labeled *.txt landmark files")->required();
    classify->add_option("--p", classify_p, "descriptor threshold")->capture_default_str();
    classify_flags.attach(classify);
    classify->callback([&] {
        action = [&] {
            const auto result = classify_1nn(io::read_landmarks(classify_file), load_prototypes(classify_dir),
                                             classify_p, classify_flags.options());
            out << json{{"label", result.label},
                        {"index", result.index},
                        {"distance", result.distance},
                        {"oriented", result.oriented}}
                       .dump(2)
                << '\n';
        };
    });

    // sweep
    std::string sweep_file;
    std::string sweep_fixture;
    std::string sweep_out;
    ExperimentConfig sweep_cfg;
    PmaFlags sweep_flags;
    auto* sweep = app.add_subcommand("sweep", "rotation sweep comparing PMA and PCA (CSV)");
    auto* sweep_file_opt = sweep->add_option("file", sweep_file, "landmark file");
    sweep->add_option("--fixture", sweep_fixture, "built-in shape instead of a file")->excludes(sweep_file_opt);
    sweep->add_option("--sigma", sweep_cfg.noise_sigma, "noise per coordinate")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();
    sweep->add_option("--steps", sweep_cfg.sweep_steps, "number of rotation angles")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    sweep->add_option("--seed", sweep_cfg.seed, "random seed")->capture_default_str();
    sweep->add_option("--drop-fraction", sweep_cfg.drop_fraction, "fraction of landmarks removed per step")
        ->check(CLI::Range(0.0, 0.95))
        ->capture_default_str();
    sweep->add_option("--out", sweep_out, "CSV path (default: standard output)");
    sweep_flags.attach(sweep);
    sweep->callback([&] {
        action = [&] {
            std::optional<ShapeVector> z;
            if (!sweep_fixture.empty()) {
                z = landmark_fixture(sweep_fixture);
                if (!z) throw Error(ErrorKind::InvalidArgument, "unknown fixture " + sweep_fixture);
            } else if (!sweep_file.empty()) {
                z = io::read_landmarks(sweep_file);
            } else {
                throw Error(ErrorKind::InvalidArgument, "sweep needs a landmark file or --fixture");
            }
            const auto rows = rotation_sweep(*z, sweep_cfg, sweep_flags.options());
            emit(sweep_out, out, [&](std::ostream& s) { write_sweep_csv(s, rows); });
        };
    });

    // image-orient
    std::string image_file;
    bool image_subtract_min = false;
    bool image_no_center = false;
    double image_pitch = 1.0;
    PmaFlags image_flags;
    auto* image = app.add_subcommand("image-orient", "PMA orientation of an ASCII (P2) PGM image");
    image->add_option("file", image_file, "PGM file")->required();
    image->add_flag("--subtract-min", image_subtract_min, "subtract the minimum intensity first");
    image->add_flag("--no-center", image_no_center, "keep the grid-centered frame");
    image->add_option("--pitch", image_pitch, "world units per pixel")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    image_flags.attach(image);
    image->callback([&] {
        action = [&] {
            auto img = io::read_pgm(image_file, image_pitch);
            if (image_subtract_min) img = subtract_minimum(img);
            if (!image_no_center) img = center_image(img);
            out << to_json(orient_image(img, image_flags.options())).dump(2) << '\n';
        };
    });

    // mc-growth
    int mc_n = 100;
    double mc_sigma = 1.0;
    int mc_kmax = 5;
    int mc_trials = 10000;
    std::uint64_t mc_seed = 0;
    std::string mc_out;
    auto* mc = app.add_subcommand("mc-growth", "Monte Carlo growth of E|mu_k|^2 for Gaussian shapes (CSV)");
    mc->add_option("--n", mc_n, "landmarks per shape")->check(CLI::PositiveNumber)->capture_default_str();
    mc->add_option("--sigma", mc_sigma, "per-coordinate standard deviation")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();
    mc->add_option("--kmax", mc_kmax, "highest order")->check(CLI::Range(1, 170))->capture_default_str();
    mc->add_option("--trials", mc_trials, "number of shapes")->check(CLI::PositiveNumber)->capture_default_str();
    mc->add_option("--seed", mc_seed, "random seed")->capture_default_str();
    mc->add_option("--out", mc_out, "CSV path (default: standard output)");
    mc->callback([&] {
        action = [&] {
            const auto rows = power_sum_growth_mc(mc_n, mc_sigma, mc_kmax, mc_trials, mc_seed);
            emit(mc_out, out, [&](std::ostream& s) { write_growth_csv(s, rows); });
        };
    });

    // fixture
    std::string fixture_name;
    std::string fixture_out;
    auto* fixture = app.add_subcommand("fixture", "write a built-in test shape (.txt) or image (.pgm)");
    fixture->add_option("name", fixture_name,
                        "five-point | two-fold | three-point | seven | elongated | three-fold | "
                        "degenerate | blobs | disc")
        ->required();
    fixture->add_option("-o,--output", fixture_out, "output path (default: standard output)");
    fixture->callback([&] {
        action = [&] {
            if (const auto z = landmark_fixture(fixture_name)) {
                emit(fixture_out, out, [&](std::ostream& s) { io::write_landmarks(s, z->landmarks()); });
            } else if (const auto img = image_fixture(fixture_name)) {
                emit(fixture_out, out, [&](std::ostream& s) { io::write_pgm(s, *img); });
            } else {
                throw Error(ErrorKind::InvalidArgument, "unknown fixture " + fixture_name);
            }
        };
    });

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (action) action();
    } catch (const Error& e) {
        return report(err, e);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitData;
    }
    return kExitOk;
}

}  // namespace pmshape
