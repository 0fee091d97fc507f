// fuse: decompose two registered grayscale images with a wavelet transform,
// combine coefficients (max magnitude on details), reconstruct, and report
// quality metrics as a benchmark table.
//
// Exit codes: 0 success, 1 usage, 2 I/O, 3 dimension mismatch, 4 numeric.

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <exception>
#include <filesystem>
#include <functional>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <wavefuse/wavefuse.hpp>

namespace {

struct MethodSpec {
    std::string label;
    wavefuse::MethodVariant variant;
};

const std::vector<MethodSpec> kAllMethods = {
    {"dwt", wavefuse::MethodVariant::dwt},         {"swt", wavefuse::MethodVariant::swt},
    {"ilwt", wavefuse::MethodVariant::ilwt},       {"dtcwt", wavefuse::MethodVariant::dtcwt},
    {"qshift", wavefuse::MethodVariant::qshift_dtcwt}};

struct RunOutcome {
    std::optional<wavefuse::Image> fused;
    wavefuse::MetricsReport report;
    std::exception_ptr error;
};

std::string format_metric(double v) {
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.4f", v);
    return buf;
}

void ensure_finite(const wavefuse::Image& img, const std::string& label) {
    for (double v : img.samples())
        if (!std::isfinite(v))
            throw wavefuse::numeric_error("non-finite coefficient in " + label + " output");
}

void print_report(const std::vector<MethodSpec>& methods, const std::vector<RunOutcome>& runs,
                  const std::string& format) {
    const std::vector<std::string> header = {"method", "EN", "PSNR", "RMSE", "IQI", "SD"};
    std::vector<std::vector<std::string>> rows;
    for (std::size_t i = 0; i < methods.size(); ++i) {
        const wavefuse::MetricsReport& r = runs[i].report;
        rows.push_back({methods[i].label, format_metric(r.entropy_bits), format_metric(r.psnr_db),
                        format_metric(r.rmse), format_metric(r.iqi), format_metric(r.sd)});
    }
    if (format == "csv" || format == "tsv") {
        const char sep = format == "csv" ? ',' : '\t';
        for (std::size_t c = 0; c < header.size(); ++c)
            std::cout << header[c] << (c + 1 < header.size() ? std::string(1, sep) : "\n");
        for (const auto& row : rows)
            for (std::size_t c = 0; c < row.size(); ++c)
                std::cout << row[c] << (c + 1 < row.size() ? std::string(1, sep) : "\n");
        return;
    }
    // pretty: aligned columns
    std::vector<std::size_t> width(header.size());
    for (std::size_t c = 0; c < header.size(); ++c) width[c] = header[c].size();
    for (const auto& row : rows)
        for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
    const auto print_row = [&](const std::vector<std::string>& cells) {
        for (std::size_t c = 0; c < cells.size(); ++c) {
            if (c) std::cout << "  ";
            const int pad = static_cast<int>(width[c] - cells[c].size());
            if (c == 0)
                std::cout << cells[c] << std::string(pad, ' ');
            else
                std::cout << std::string(pad, ' ') << cells[c];
        }
        std::cout << "\n";
    };
    print_row(header);
    for (const auto& row : rows) print_row(row);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Wavelet image fusion benchmark"};

    std::string method = "all";
    std::size_t levels = 4;
    std::string bank = "db4";
    std::string approx_rule = "average";
    std::string reference = "mean";
    std::string format = "csv";
    std::string input1, input2, outdir;
    long long seed = 0;

    app.add_option("input1", input1, "first source image (PGM or PNG)")->required();
    app.add_option("input2", input2, "second source image (PGM or PNG)")->required();
    app.add_option("-o,--output", outdir, "output directory for fused images")->required();
    app.add_option("-m,--method", method, "fusion method")
        ->check(CLI::IsMember({"dwt", "swt", "ilwt", "dtcwt", "qshift", "all"}))
        ->capture_default_str();
    app.add_option("-l,--levels", levels, "decomposition depth")
        ->check(CLI::Range(std::size_t{1}, std::size_t{16}))
        ->capture_default_str();
    app.add_option("-b,--bank", bank, "filter bank for dwt/swt (haar, db4)")
        ->capture_default_str();
    app.add_option("--approx-rule", approx_rule, "approximation-band rule")
        ->check(CLI::IsMember({"average", "max"}))
        ->capture_default_str();
    app.add_option("--reference", reference, "metric reference policy")
        ->check(CLI::IsMember({"source1", "source2", "mean"}))
        ->capture_default_str();
    app.add_option("-f,--format", format, "report format")
        ->check(CLI::IsMember({"csv", "tsv", "pretty"}))
        ->capture_default_str();
    app.add_option("--seed", seed, "reserved; the pipeline has no randomness")
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        std::cout << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n" << app.help();
        return 1;
    }

    std::vector<MethodSpec> methods;
    for (const MethodSpec& spec : kAllMethods)
        if (method == "all" || method == spec.label) methods.push_back(spec);

    wavefuse::FusionRule rule;
    rule.approx = approx_rule == "max" ? wavefuse::ApproxRule::max_magnitude
                                       : wavefuse::ApproxRule::average;
    wavefuse::ReferencePolicy policy = wavefuse::ReferencePolicy::mean_of_both;
    if (reference == "source1") policy = wavefuse::ReferencePolicy::vs_source1;
    if (reference == "source2") policy = wavefuse::ReferencePolicy::vs_source2;

    wavefuse::Image src1, src2;
    try {
        src1 = wavefuse::load_image(input1);
        src2 = wavefuse::load_image(input2);
    } catch (const wavefuse::io_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    if (src1.width() != src2.width() || src1.height() != src2.height()) {
        std::cerr << "error: dimension mismatch: " << input1 << " is " << src1.width() << "x"
                  << src1.height() << " but " << input2 << " is " << src2.width() << "x"
                  << src2.height() << "\n";
        return 3;
    }

    std::error_code ec;
    std::filesystem::create_directories(outdir, ec);
    if (ec) {
        std::cerr << "error: cannot create output directory " << outdir << ": " << ec.message()
                  << "\n";
        return 2;
    }

    std::vector<RunOutcome> runs(methods.size());
    std::vector<std::function<void()>> tasks;
    for (std::size_t i = 0; i < methods.size(); ++i)
        tasks.push_back([&, i] {
            try {
                wavefuse::Method m;
                m.variant = methods[i].variant;
                m.bank = bank;
                m.levels = levels;
                wavefuse::Image fused = wavefuse::fuse_images(src1, src2, m, rule);
                ensure_finite(fused, methods[i].label);
                runs[i].report = wavefuse::report(fused, src1, src2, policy);
                runs[i].report.method_name = methods[i].label;
                runs[i].fused = std::move(fused);
            } catch (...) {
                runs[i].error = std::current_exception();
            }
        });
    wavefuse::detail::run_tasks(std::move(tasks));

    for (std::size_t i = 0; i < methods.size(); ++i) {
        if (!runs[i].error) continue;
        try {
            std::rethrow_exception(runs[i].error);
        } catch (const wavefuse::io_error& e) {
            std::cerr << "error: " << e.what() << "\n";
            return 2;
        } catch (const wavefuse::numeric_error& e) {
            std::cerr << "error: " << e.what() << "\n";
            return 4;
        } catch (const wavefuse::undefined_metric& e) {
            std::cerr << "error: " << e.what() << "\n";
            return 4;
        } catch (const std::exception& e) {
            std::cerr << "error: " << methods[i].label << ": " << e.what() << "\n";
            return 1;
        }
    }

    try {
        for (std::size_t i = 0; i < methods.size(); ++i) {
            const std::filesystem::path out =
                std::filesystem::path(outdir) / ("fused_" + methods[i].label + ".pgm");
            wavefuse::save_image(*runs[i].fused, out.string());
        }
    } catch (const wavefuse::io_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    print_report(methods, runs, format);
    return 0;
}
