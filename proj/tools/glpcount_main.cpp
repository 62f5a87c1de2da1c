#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>

#include "glpcount/cache.hpp"
#include "glpcount/polynomials.hpp"
#include "glpcount/purity_pipeline.hpp"
#include "glpcount/twisted_enumeration.hpp"
#include "glpcount/verification.hpp"

namespace {

constexpr int kExitVerificationFailure = 1;
constexpr int kExitInfeasible = 2;
constexpr int kExitBadInput = 3;

struct CommonFlags {
    int m = 7;
    std::string cycle_class;
    std::string condition = "glp";
    int threads = 0;
    std::uint64_t budget = 10'000'000'000ULL;
    std::string engine = "auto";
    std::string cache_dir = "cache";
    bool no_cache = false;
    bool progress = false;
};

glp::CountRecord run_count(const CommonFlags& flags, std::int64_t p) {
    glp::CycleType lambda = glp::parse_cycle_type(flags.cycle_class);
    glp::GeneralityCondition condition = glp::parse_condition(flags.condition, flags.m);
    glp::CountOptions options;
    options.threads = flags.threads;
    options.budget = flags.budget;
    options.progress = flags.progress;
    glp::CountRecord record;
    if (flags.engine == "twisted")
        record = glp::count_twisted(flags.m, lambda, p, condition, options);
    else if (flags.engine == "frame")
        record = glp::count_frame_normalized(flags.m, lambda, p, condition, options);
    else if (flags.engine == "auto")
        record = glp::count_auto(flags.m, lambda, p, condition, options);
    else
        throw CLI::ValidationError("--engine must be auto, twisted or frame");
    if (!flags.no_cache) {
        glp::ResultCache cache(flags.cache_dir);
        std::string mismatch;
        if (!cache.store(record, &mismatch)) throw std::runtime_error(mismatch);
    }
    return record;
}

void print_record(const glp::CountRecord& record) {
    std::cout << "m=" << record.m << " class=" << glp::format_dotted(record.cycle_type)
              << " p=" << record.p << " condition=" << record.condition
              << " engine=" << record.engine
              << " raw_fixed_count=" << record.raw_fixed_count.str()
              << " quotient_count=" << record.quotient_count.str() << "\n";
}

std::vector<std::int64_t> parse_primes(const std::string& text) {
    std::vector<std::int64_t> primes;
    size_t pos = 0;
    while (pos < text.size()) {
        size_t comma = text.find(',', pos);
        std::string tok = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        primes.push_back(std::stoll(tok));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return primes;
}

void print_polynomial(const glp::CountPolynomial& poly) {
    std::cout << "coefficients:";
    for (int k = static_cast<int>(poly.coeffs.size()) - 1; k >= 0; --k)
        std::cout << " " << poly.coeffs[k].str();
    std::cout << "\n";
    std::cout << "polynomial: " << glp::format_polynomial(poly) << "\n";
}

std::map<glp::CycleType, glp::CountPolynomial> polynomials_from_json(const std::string& path,
                                                                     int m) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    // minimal parser for {"class": [c_high, ..., c_0], ...}
    std::map<glp::CycleType, glp::CountPolynomial> polys;
    std::string content((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    size_t pos = 0;
    while ((pos = content.find('"', pos)) != std::string::npos) {
        size_t end = content.find('"', pos + 1);
        if (end == std::string::npos) break;
        std::string key = content.substr(pos + 1, end - pos - 1);
        size_t open = content.find('[', end);
        size_t close = content.find(']', open);
        if (open == std::string::npos || close == std::string::npos) break;
        std::string list = content.substr(open + 1, close - open - 1);
        glp::CountPolynomial poly;
        std::vector<glp::BigInt> descending;
        size_t p2 = 0;
        while (p2 < list.size()) {
            size_t comma = list.find(',', p2);
            std::string tok = list.substr(p2, comma == std::string::npos ? std::string::npos : comma - p2);
            size_t a = tok.find_first_not_of(" \t\n");
            size_t b = tok.find_last_not_of(" \t\n");
            if (a != std::string::npos) descending.emplace_back(tok.substr(a, b - a + 1));
            if (comma == std::string::npos) break;
            p2 = comma + 1;
        }
        poly.coeffs.assign(descending.rbegin(), descending.rend());
        glp::CycleType lambda = glp::parse_cycle_type(key);
        if (lambda.sum() != m) throw std::runtime_error("class " + key + " does not sum to m");
        polys[lambda] = std::move(poly);
        pos = close + 1;
    }
    return polys;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Equivariant point counts of plane point configurations over finite fields"};
    app.require_subcommand(1);

    CommonFlags flags;
    std::int64_t p = 3;

    auto add_common = [&](CLI::App* cmd, bool with_class = true) {
        cmd->add_option("--m", flags.m, "number of points");
        if (with_class)
            cmd->add_option("--class", flags.cycle_class, "cycle type, e.g. 2.2.1.1.1 or 1x7")
                ->required();
        cmd->add_option("--condition", flags.condition, "generality condition: glp or gp8");
        cmd->add_option("--threads", flags.threads,
                        "worker count (default: GLPCOUNT_THREADS or all cores)");
        cmd->add_option("--budget", flags.budget, "iteration budget before a job is refused");
        cmd->add_option("--cache-dir", flags.cache_dir, "result cache directory");
        cmd->add_flag("--no-cache", flags.no_cache, "do not read or write the result cache");
        cmd->add_flag("--progress", flags.progress, "report progress to stderr");
    };

    auto* cmd_count = app.add_subcommand("count", "count twisted fixed tuples at one prime");
    add_common(cmd_count);
    cmd_count->add_option("--p", p, "odd prime")->required();
    cmd_count->add_option("--engine", flags.engine, "auto, twisted or frame");

    auto* cmd_interp = app.add_subcommand("interpolate", "count at several primes and interpolate");
    add_common(cmd_interp);
    std::string primes_text = "3,5,7,11,13,17,19";
    cmd_interp->add_option("--primes", primes_text, "comma-separated odd primes");
    cmd_interp->add_option("--engine", flags.engine, "auto, twisted or frame");
    int degree_bound = -1;
    cmd_interp->add_option("--degree", degree_bound, "degree bound (default 2m-8)");

    auto* cmd_chars = app.add_subcommand("characters", "print the character table of S_m as CSV");
    cmd_chars->add_option("--m", flags.m, "symmetric group degree");

    auto* cmd_decomp = app.add_subcommand("decompose", "decompose count polynomials into cohomology");
    std::string source = "builtin";
    std::string format = "csv";
    std::string file_path;
    cmd_decomp->add_option("--m", flags.m, "number of points");
    cmd_decomp->add_option("--source", source, "builtin, cache or file");
    cmd_decomp->add_option("--format", format, "csv or json");
    cmd_decomp->add_option("--file", file_path, "JSON file of {class: [coefficients high..low]}");
    cmd_decomp->add_option("--condition", flags.condition, "condition for --source cache");
    cmd_decomp->add_option("--cache-dir", flags.cache_dir, "result cache directory");

    auto* cmd_verify = app.add_subcommand("verify", "run the verification suite");
    std::string tier = "fast";
    cmd_verify->add_option("--tier", tier, "fast or full");
    cmd_verify->add_option("--threads", flags.threads, "worker count");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitBadInput;
    }

    try {
        if (cmd_count->parsed()) {
            print_record(run_count(flags, p));
            return 0;
        }

        if (cmd_interp->parsed()) {
            auto primes = parse_primes(primes_text);
            if (degree_bound < 0) degree_bound = 2 * flags.m - 8;
            std::vector<std::pair<std::int64_t, glp::BigInt>> samples;
            for (std::int64_t prime : primes) {
                glp::CountRecord record = run_count(flags, prime);
                std::cerr << "sample p=" << prime << ": " << record.quotient_count.str() << "\n";
                samples.emplace_back(prime, record.quotient_count);
            }
            glp::CountPolynomial poly = glp::interpolate(samples, degree_bound);
            print_polynomial(poly);
            if (flags.m == 7 && flags.condition == "glp") {
                const auto& expected = glp::builtin_table1().at(glp::parse_cycle_type(flags.cycle_class));
                std::cout << "builtin_match: " << (poly == expected ? "yes" : "no") << "\n";
                if (poly != expected) return kExitVerificationFailure;
            }
            return 0;
        }

        if (cmd_chars->parsed()) {
            std::cout << glp::build_character_table(flags.m).to_csv();
            return 0;
        }

        if (cmd_decomp->parsed()) {
            std::map<glp::CycleType, glp::CountPolynomial> polys;
            if (source == "builtin") {
                if (flags.m != 7)
                    throw CLI::ValidationError("builtin polynomials exist only for m=7");
                polys = glp::builtin_table1();
            } else if (source == "file") {
                polys = polynomials_from_json(file_path, flags.m);
            } else if (source == "cache") {
                glp::ResultCache cache(flags.cache_dir);
                auto records = cache.load(flags.m, flags.condition);
                std::map<glp::CycleType, std::vector<std::pair<std::int64_t, glp::BigInt>>> samples;
                for (const auto& r : records)
                    samples[r.cycle_type].emplace_back(r.p, r.quotient_count);
                int bound = 2 * flags.m - 8;
                for (auto& [lambda, s] : samples) {
                    std::sort(s.begin(), s.end());
                    polys[lambda] = glp::interpolate(s, bound);
                }
            } else {
                throw CLI::ValidationError("--source must be builtin, cache or file");
            }
            int d = 2 * flags.m - 8;
            glp::CohomologyResult result = glp::cohomology_table(polys, flags.m, d);
            if (!result.ok()) {
                for (const auto& problem : result.problems)
                    std::cerr << "decomposition failure: degree " << problem.degree << ", irreducible "
                              << glp::format_exponent(problem.partition) << ", multiplicity "
                              << problem.value << " (" << problem.reason << ")\n";
                return kExitVerificationFailure;
            }
            if (format == "json")
                std::cout << result.table->to_json();
            else
                std::cout << result.table->to_csv();
            // total dimension per degree
            std::cout << "dim";
            for (int k = 0; k <= d; ++k) {
                glp::BigInt dim = 0;
                for (size_t i = 0; i < result.table->partitions.size(); ++i)
                    dim += result.table->mult[k][i] *
                           glp::BigInt(glp::hook_dimension(result.table->partitions[i]));
                std::cout << "," << dim.str();
            }
            std::cout << "\n";
            return 0;
        }

        if (cmd_verify->parsed()) {
            glp::verify::Tier t =
                tier == "full" ? glp::verify::Tier::Full : glp::verify::Tier::Fast;
            if (tier != "fast" && tier != "full")
                throw CLI::ValidationError("--tier must be fast or full");
            auto results = glp::verify::run_acceptance(t, flags.threads, std::cout);
            bool all = true;
            for (const auto& r : results) all = all && r.passed;
            return all ? 0 : kExitVerificationFailure;
        }
    } catch (const glp::InfeasibleError& e) {
        std::cerr << "infeasible: " << e.what() << "\n";
        return kExitInfeasible;
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitVerificationFailure;
    }
    return 0;
}
