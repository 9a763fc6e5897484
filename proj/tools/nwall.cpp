#include <cmath>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "nwall/engine.hpp"
#include "nwall/fractal.hpp"
#include "nwall/geometry.hpp"
#include "nwall/io.hpp"
#include "nwall/morphism2d.hpp"
#include "nwall/render.hpp"
#include "nwall/verify.hpp"

using namespace nwall;

namespace {

u64 ipow(u64 b, int e) {
    u64 r = 1;
    while (e-- > 0) r *= b;
    return r;
}

double log_u128(u128 v) {
    double acc = 0.0;
    while (v > static_cast<u128>(1e17)) {
        v /= 1024;
        acc += std::log(1024.0);
    }
    return acc + std::log(static_cast<double>(static_cast<u64>(v)));
}

Seq make_sequence(Prime p, const std::string& kind, std::optional<int> h, std::optional<i64> len,
                  const std::string& pad, const std::string& file) {
    Seq base = [&] {
        if (kind == "file") return seq_from_text(read_file(file));
        size_t n;
        if (h) n = ipow(p.value(), *h);
        else if (len) n = static_cast<size_t>(*len);
        else throw CLI::ValidationError("--h or --len is required");
        if (kind == "cantor") return cantor(p, n);
        if (kind == "singer") return singer(p, n);
        if (kind == "pseudo-singer") return pseudo_singer(p, n);
        throw CLI::ValidationError("unknown sequence kind: " + kind);
    }();

    if (pad == "none") return base;
    if (pad == "tilde") return zero_pad_both(base, static_cast<size_t>(base.size()));
    if (pad == "left") return left_zero_extend(base);
    if (pad == "both-infinite") return Seq::zero_extended(base.prime(), base.values(), base.lo());
    throw CLI::ValidationError("unknown pad mode: " + pad);
}

void write_output(const Wall& w, const std::string& out, const std::string& format) {
    std::string fmt = format;
    if (fmt.empty()) {
        auto dot = out.rfind('.');
        std::string ext = dot == std::string::npos ? "" : out.substr(dot + 1);
        if (ext == "ppm") fmt = "image";
        else if (ext == "pgm") fmt = "profile-image";
        else if (ext == "txt" || ext == "profile") fmt = "profile";
        else fmt = "wall";
    }
    if (fmt == "image") write_file(out, render_wall_ppm(w));
    else if (fmt == "profile-image") write_file(out, render_profile_pgm(profile(w)));
    else if (fmt == "profile") write_file(out, profile_to_text(profile(w)));
    else if (fmt == "wall") write_file(out, wall_to_bytes(w));
    else throw CLI::ValidationError("unknown format: " + fmt);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"number wall engine over prime fields"};
    app.require_subcommand(1);
    app.set_help_flag("--help", "print help"); // frees -h / --h for the power option

    u64 seed = 271828;
    if (const char* env = std::getenv("NWALL_SEED")) seed = std::strtoull(env, nullptr, 10);

    auto* gen = app.add_subcommand("gen", "generate a wall and write it out");
    gen->set_help_flag("--help");
    u64 gen_p = 3;
    std::string gen_seq = "cantor", gen_pad = "tilde", gen_out, gen_format, gen_file;
    std::optional<int> gen_h;
    std::optional<i64> gen_len, gen_maxrow, gen_collo, gen_colhi;
    u64 gen_r0 = 1, gen_a0 = 1;
    gen->add_option("--p", gen_p, "odd prime modulus")->required();
    gen->add_option("--seq", gen_seq, "cantor | singer | pseudo-singer | file");
    gen->add_option("--file", gen_file, "sequence file for --seq file");
    gen->add_option("--h", gen_h, "sequence prefix length p^h");
    gen->add_option("--len", gen_len, "explicit prefix length");
    gen->add_option("--pad", gen_pad, "none | tilde | left | both-infinite");
    gen->add_option("--max-row", gen_maxrow, "last generated row (default: full triangle)");
    gen->add_option("--col-lo", gen_collo, "first stored column");
    gen->add_option("--col-hi", gen_colhi, "last stored column");
    gen->add_option("--r0", gen_r0, "row -1 ratio for an (r,a)-wall");
    gen->add_option("--a0", gen_a0, "row -1 value for an (r,a)-wall");
    gen->add_option("--out", gen_out,
                    "output path (.ppm image, .pgm profile image, .txt profile, else wall dump)")
        ->required();
    gen->add_option("--format", gen_format, "override: image | profile-image | profile | wall");

    auto* seqcmd = app.add_subcommand("seq", "emit a sequence prefix as text");
    seqcmd->set_help_flag("--help");
    u64 seq_p = 3;
    std::string seq_kind = "cantor", seq_out;
    std::optional<int> seq_h;
    std::optional<i64> seq_len;
    seqcmd->add_option("--p", seq_p)->required();
    seqcmd->add_option("--kind", seq_kind, "cantor | singer | pseudo-singer");
    seqcmd->add_option("--h", seq_h);
    seqcmd->add_option("--len", seq_len);
    seqcmd->add_option("--out", seq_out, "output path (default stdout)");

    auto* ver = app.add_subcommand("verify", "run the lemma verification suite");
    std::vector<std::string> ver_suites;
    std::vector<u64> ver_ps{3, 5};
    std::string ver_json;
    int ver_trials = 50;
    bool ver_timing = false;
    ver->add_option("--suite", ver_suites, "check-name filters; 'all' or empty runs everything");
    ver->add_option("--p", ver_ps, "primes to run");
    ver->add_option("--trials", ver_trials, "randomized trials per check");
    ver->add_option("--seed", seed, "rng seed (default from NWALL_SEED)");
    ver->add_option("--json", ver_json, "write the JSON report here");
    ver->add_flag("--timing", ver_timing, "emit measured millis (reports stop being byte-stable)");

    auto* fr = app.add_subcommand("fractal", "per-level box counts and dimension estimate");
    u64 fr_p = 3;
    int fr_levels = 5;
    std::string fr_csv, fr_source = "wall";
    fr->add_option("--p", fr_p)->required();
    fr->add_option("--levels", fr_levels);
    fr->add_option("--csv", fr_csv, "write CSV here (default stdout)");
    fr->add_option("--source", fr_source, "wall | morphism");

    auto* ren = app.add_subcommand("render", "render a wall dump to an image");
    std::string ren_in, ren_out;
    bool ren_profile = false;
    ren->add_option("--in", ren_in, "wall dump")->required();
    ren->add_option("--out", ren_out, "image path")->required();
    ren->add_flag("--profile", ren_profile, "render the profile instead of residues");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*gen) {
            Prime p(gen_p);
            Seq s = make_sequence(p, gen_seq, gen_h, gen_len, gen_pad, gen_file);
            GenOptions opt;
            opt.max_row = gen_maxrow.value_or((s.size() - 1) / 2);
            opt.col_lo = gen_collo;
            opt.col_hi = gen_colhi;
            opt.r0 = gen_r0;
            opt.a0 = gen_a0;
            write_output(generate_wall(s, opt), gen_out, gen_format);
        } else if (*seqcmd) {
            Prime p(seq_p);
            size_t n = seq_h ? ipow(seq_p, *seq_h) : static_cast<size_t>(seq_len.value_or(0));
            if (n == 0) throw CLI::ValidationError("--h or --len is required");
            Seq s = seq_kind == "cantor"          ? cantor(p, n)
                    : seq_kind == "singer"        ? singer(p, n)
                    : seq_kind == "pseudo-singer" ? pseudo_singer(p, n)
                                                  : throw CLI::ValidationError("unknown kind");
            if (seq_out.empty()) std::cout << seq_to_text(s);
            else write_file(seq_out, seq_to_text(s));
        } else if (*ver) {
            SuiteOptions opt;
            for (const auto& f : ver_suites)
                if (f != "all") opt.filters.push_back(f);
            opt.primes = ver_ps;
            opt.trials = ver_trials;
            opt.seed = seed;
            opt.timing = ver_timing;
            auto results = run_suite(opt);
            if (!ver_json.empty()) write_file(ver_json, report_to_json(results));
            int passed = 0;
            for (const auto& r : results) {
                std::cout << (r.pass ? "pass " : "FAIL ") << r.check;
                for (const auto& [k, v] : r.params) std::cout << " " << k << "=" << v;
                std::cout << "\n";
                passed += r.pass ? 1 : 0;
            }
            std::cout << passed << "/" << results.size() << " checks passed\n";
            return all_pass(results) ? 0 : 1;
        } else if (*fr) {
            Prime p(fr_p);
            std::ostringstream csv;
            csv << "level,k_count,N_k,a_k,estimate\n";
            std::vector<u128> counts;
            Morphism2D phi = phi_p(p);
            for (int k = 1; k <= fr_levels; ++k) {
                u128 count;
                if (fr_source == "morphism") {
                    count = nonzero_count(phi, Letter::A, k);
                } else {
                    i64 ph = static_cast<i64>(ipow(fr_p, k));
                    Seq padded =
                        zero_pad_both(cantor(p, static_cast<size_t>(ph)), static_cast<size_t>(ph));
                    Wall w = generate_wall(padded, ph - 1);
                    auto frag = extract_region(w, 0, ph - 1, ph, 2 * ph - 1);
                    count = boxes_from_profile(profile(frag.wall), k, p).count;
                }
                counts.push_back(count);
                auto cf = closed_form_counts(p, k);
                double est = log_u128(count) / (k * std::log(static_cast<double>(fr_p)));
                csv << k << "," << u128_to_string(count) << "," << u128_to_string(cf.n_k) << ","
                    << u128_to_string(cf.a_k) << "," << est << "\n";
            }
            if (counts.size() >= 2) {
                DimEstimate est = box_dim_estimate(counts, p);
                csv << "# deepest-level estimate: " << est.deepest << "\n";
                csv << "# least-squares slope:    " << est.slope << "\n";
            }
            if (fr_csv.empty()) std::cout << csv.str();
            else write_file(fr_csv, csv.str());
        } else if (*ren) {
            Wall w = wall_from_bytes(read_file(ren_in));
            write_file(ren_out, ren_profile ? render_profile_ppm(profile(w)) : render_wall_ppm(w));
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
