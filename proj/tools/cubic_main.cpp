#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"

#include "cubic/conic.hpp"
#include "cubic/counters.hpp"
#include "cubic/datasets.hpp"
#include "cubic/zeta.hpp"

using namespace cubic;

namespace {

struct CommonOpts {
    std::string input;
    std::string data_dir;
    std::string m_range = "1..11";
    std::string method = "cover";
    int threads = 0;
    int line_index = 0;
    bool json = false;
};

std::pair<int, int> parse_range(const std::string& s) {
    auto pos = s.find("..");
    if (pos == std::string::npos) {
        int m = std::stoi(s);
        return {m, m};
    }
    return {std::stoi(s.substr(0, pos)), std::stoi(s.substr(pos + 2))};
}

int default_threads() {
    if (const char* env = std::getenv("CUBIC_THREADS")) return std::atoi(env);
    return int(std::thread::hardware_concurrency());
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

bool is_dataset(const std::string& name) {
    for (const auto& n : dataset_names())
        if (n == name) return true;
    return false;
}

// dataset name -> its reduced cubic; anything else -> polynomial file over Q
MPolyF2 load_cubic(const std::string& input, const std::string& data_dir) {
    if (is_dataset(input)) return load_dataset(input, data_dir).f_mod2;
    return reduce_mod2(parse_mpoly_q(read_text_file(input), 6, 'y'));
}

ConicBundle pick_bundle(const MPolyF2& f, int line_index) {
    auto lines = find_lines_F2(f);
    if (lines.empty())
        throw std::runtime_error(
            "the cubic has no line over F_2; the conic-bundle method needs one");
    if (line_index < 0 || line_index >= int(lines.size()))
        throw std::runtime_error("--line index out of range; found " +
                                 std::to_string(lines.size()) + " lines");
    return frame_line(f, lines[line_index]);
}

CountRecord run_one_count(const MPolyF2& f, const std::string& method, int m,
                          int threads, int line_index) {
    FieldCtx ctx(m);
    if (method == "naive") return count_naive(f, ctx);
    if (method == "point") {
        auto p = find_point_F2(f);
        if (!p) throw std::runtime_error("the cubic has no F_2-point");
        return count_point_projection(f, *p, ctx);
    }
    ConicBundle b = pick_bundle(f, line_index);
    if (method == "p3") return count_conic_P3(b, ctx, threads);
    if (method == "cover") {
        auto center = find_cover_center(b);
        if (!center)
            throw std::runtime_error(
                "no projection center for the cover method on this line; try "
                "--line or --method p3");
        return count_conic_cover(b, *center, ctx, threads);
    }
    throw std::runtime_error("unknown method: " + method);
}

std::vector<long long> counts_in_range(const MPolyF2& f, const CommonOpts& opt,
                                       int lo, int hi,
                                       std::vector<CountRecord>* records = nullptr) {
    std::vector<long long> counts;
    for (int m = lo; m <= hi; ++m) {
        CountRecord r = run_one_count(f, opt.method, m, opt.threads, opt.line_index);
        counts.push_back(r.count);
        if (records) records->push_back(r);
    }
    return counts;
}

void emit_records(const std::vector<CountRecord>& records, bool json) {
    if (json) {
        nlohmann::json j = nlohmann::json::array();
        for (const auto& r : records)
            j.push_back({{"m", r.m},
                         {"count", r.count},
                         {"method", r.method},
                         {"seconds", r.seconds}});
        std::cout << j.dump(2) << "\n";
    } else {
        for (const auto& r : records)
            std::cout << r.m << "\t" << r.count << "\t" << r.method << "\t"
                      << r.seconds << "\n";
    }
}

std::string rat_text(const Rat& r) {
    std::string s = rat_num(r).str();
    if (rat_den(r) != 1) s += "/" + rat_den(r).str();
    return s;
}

int cmd_count(const CommonOpts& opt) {
    MPolyF2 f = load_cubic(opt.input, opt.data_dir);
    auto [lo, hi] = parse_range(opt.m_range);
    std::vector<CountRecord> records;
    counts_in_range(f, opt, lo, hi, &records);
    emit_records(records, opt.json);
    return 0;
}

int cmd_nl_check(const CommonOpts& opt) {
    MPolyF2 f = load_cubic(opt.input, opt.data_dir);
    auto [lo, hi] = parse_range(opt.m_range);
    if (lo != 1 || hi < 11)
        throw std::runtime_error("nl-check needs the range to cover m = 1..11");
    std::vector<long long> counts = counts_in_range(f, opt, lo, hi);
    auto cands = complete_charpoly(counts);
    std::optional<long long> c12;
    if (hi >= 12) c12 = counts[11];
    CharPoly chi = disambiguate(cands, c12);
    NLReport rep = nl_verdict(chi);
    std::cout << nl_report_json(counts, rep) << "\n";
    return rep.nl_general ? 0 : 1;
}

int cmd_charpoly(const std::string& tsv_path) {
    std::ifstream in(tsv_path);
    if (!in) throw std::runtime_error("cannot open " + tsv_path);
    std::map<int, long long> by_m;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        int m;
        long long count;
        if (!(ls >> m >> count))
            throw std::runtime_error("bad TSV line: " + line);
        by_m[m] = count;
    }
    std::vector<long long> counts;
    for (int m = 1; m <= 11; ++m) {
        auto it = by_m.find(m);
        if (it == by_m.end())
            throw std::runtime_error("counts file must cover m = 1..11");
        counts.push_back(it->second);
    }
    auto cands = complete_charpoly(counts);
    std::optional<long long> c12;
    if (by_m.count(12)) c12 = by_m[12];
    CharPoly chi = disambiguate(cands, c12);

    nlohmann::json j;
    std::vector<std::string> coeffs;
    for (const Rat& c : chi.coeffs) coeffs.push_back(rat_text(c));
    j["charpoly"] = coeffs;
    j["sign"] = chi.sign;
    j["provenance"] = chi.provenance;
    std::cout << j.dump(2) << "\n";
    return 0;
}

int cmd_apolar(const std::string& name, const std::string& data_dir) {
    Dataset ds = load_dataset(name, data_dir);
    int failures = 0;
    if (ds.g) {
        bool ok = mvee(*ds.g) == ds.f;
        std::cout << (ok ? "PASS" : "FAIL") << " mvee(g) equals f\n";
        if (!ok) ++failures;
    }
    ApolarityReport rep = is_apolar(ds.f, ds.ideal);
    std::cout << (rep.apolar ? "PASS" : "FAIL") << " f apolar to the "
              << ds.ideal.size() << "-generator ideal\n";
    if (!rep.apolar) {
        ++failures;
        std::cout << "  violating generator index " << rep.witness_index
                  << ", pairing " << rep.residual.to_string() << "\n";
    }
    return failures == 0 ? 0 : 1;
}

int cmd_mvee(const std::string& path) {
    MPolyQ g = parse_mpoly_q(read_text_file(path), 3, 'x');
    std::cout << mvee(g).to_string() << "\n";
    return 0;
}

int cmd_find_lines(const CommonOpts& opt) {
    MPolyF2 f = load_cubic(opt.input, opt.data_dir);
    auto lines = find_lines_F2(f);
    for (size_t i = 0; i < lines.size(); ++i) {
        auto bits = [](uint8_t mask) {
            std::string s = "(";
            for (int j = 0; j < 6; ++j) {
                s += (mask >> j & 1) ? "1" : "0";
                s += j < 5 ? "," : ")";
            }
            return s;
        };
        std::cout << i << "\t" << bits(lines[i].a) << "\t" << bits(lines[i].b)
                  << "\n";
    }
    std::cerr << lines.size() << " lines over F_2\n";
    return 0;
}

int cmd_dump_field(int m) {
    FieldCtx ctx(m);
    nlohmann::json j;
    j["m"] = ctx.m();
    j["q"] = ctx.q();
    j["modulus"] = ctx.modulus();
    j["has_cubic_table"] = ctx.has_cubic_table();
    j["table_checksum"] = ctx.table_checksum();
    std::cout << j.dump(2) << "\n";
    return 0;
}

int cmd_verify_paper(const std::string& data_dir, int threads) {
    int failures = 0;
    auto check = [&](bool ok, const std::string& what) {
        std::cout << (ok ? "PASS" : "FAIL") << " " << what << "\n";
        if (!ok) ++failures;
    };
    for (const auto& name : dataset_names()) {
        Dataset ds = load_dataset(name, data_dir);
        ConicBundle b = frame_line(ds.f_mod2, find_lines_F2(ds.f_mod2).front());
        auto center = find_cover_center(b);
        if (!center) {
            check(false, name + ": cover projection center exists");
            continue;
        }
        std::vector<long long> counts;
        bool table_ok = true;
        int first_bad = 0;
        for (int m = 1; m <= 11; ++m) {
            FieldCtx ctx(m);
            long long c = count_conic_cover(b, *center, ctx, threads).count;
            counts.push_back(c);
            if (c != ds.expected_counts[m - 1] && table_ok) {
                table_ok = false;
                first_bad = m;
            }
        }
        check(table_ok, name + ": reference counts m=1..11" +
                            (table_ok ? "" : " (first mismatch at m=" +
                                                 std::to_string(first_bad) + ")"));

        CharPoly chi = disambiguate(complete_charpoly(counts));
        bool chi_ok = chi.coeffs == ds.expected_charpoly;
        if (!chi_ok)
            for (int k = 0; k <= 22; ++k)
                if (chi.coeffs[k] != ds.expected_charpoly[k]) {
                    std::cout << "  t^" << k << ": got " << rat_text(chi.coeffs[k])
                              << ", expected "
                              << rat_text(ds.expected_charpoly[k]) << "\n";
                    break;
                }
        check(chi_ok, name + ": characteristic polynomial");

        NLReport rep = nl_verdict(chi);
        check(rep.cyclotomic.empty() && rep.rank_bound == 0,
              name + ": no cyclotomic factors (NL-general, rank bound 0)");
        check(rep.integrality.twist2 && rep.integrality.twist4,
              name + ": 2^22 chi(t/2) and 4^22 chi(t/4) integral");

        if (ds.g) check(mvee(*ds.g) == ds.f, name + ": mvee(g) equals f");
        check(is_apolar(ds.f, ds.ideal).apolar, name + ": apolarity certificate");

        bool agree = true;
        auto pt = find_point_F2(ds.f_mod2);
        for (int m = 1; m <= 3 && agree; ++m) {
            FieldCtx ctx(m);
            long long n = count_naive(ds.f_mod2, ctx).count;
            agree = counts[m - 1] == n &&
                    count_conic_P3(b, ctx, threads).count == n &&
                    (pt && count_point_projection(ds.f_mod2, *pt, ctx).count == n);
        }
        check(agree, name + ": naive/P3/cover/point cross-agreement m=1..3");
    }
    std::cout << (failures == 0 ? "ALL CHECKS PASSED"
                                : std::to_string(failures) + " CHECKS FAILED")
              << "\n";
    return failures == 0 ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"point counts and Frobenius characteristic polynomials for "
                 "cubic fourfolds over F_{2^m}"};
    app.require_subcommand(0, 1);

    CommonOpts opt;
    opt.threads = default_threads();
    int dump_m = 0;
    app.add_option("--dump-field", dump_m,
                   "print the F_{2^m} model (modulus, table checksum) and exit");

    auto add_common = [&](CLI::App* sub, bool with_input = true) {
        if (with_input)
            sub->add_option("input", opt.input,
                            "dataset name (thm1|thm2|thm3) or polynomial file")
                ->required();
        sub->add_option("--data", opt.data_dir, "dataset directory override");
        sub->add_option("--m", opt.m_range, "extension degree range, e.g. 1..11");
        sub->add_option("--method", opt.method, "cover | p3 | naive | point")
            ->check(CLI::IsMember({"cover", "p3", "naive", "point"}));
        sub->add_option("--threads", opt.threads,
                        "worker threads (default: CUBIC_THREADS or hardware)");
        sub->add_option("--line", opt.line_index, "index of the F_2-line to use");
        sub->add_flag("--json", opt.json, "JSON instead of TSV output");
    };

    auto* count = app.add_subcommand("count", "count points over F_{2^m}");
    add_common(count);
    auto* nl = app.add_subcommand(
        "nl-check", "counts -> charpoly -> Noether-Lefschetz verdict (JSON)");
    add_common(nl);
    auto* charp = app.add_subcommand("charpoly",
                                     "characteristic polynomial from a counts TSV");
    std::string tsv_path;
    charp->add_option("counts", tsv_path, "TSV file with lines 'm<TAB>count'")
        ->required();
    auto* apolar = app.add_subcommand("apolar", "apolarity certificates");
    std::string apolar_name;
    apolar->add_option("dataset", apolar_name, "thm1 | thm2 | thm3")->required();
    apolar->add_option("--data", opt.data_dir, "dataset directory override");
    auto* mv = app.add_subcommand("mvee", "apolar cubic of a plane sextic");
    std::string sextic_path;
    mv->add_option("sextic", sextic_path, "polynomial file in x0..x2")->required();
    auto* fl = app.add_subcommand("find-lines", "list the F_2-lines on a cubic");
    add_common(fl);
    auto* verify =
        app.add_subcommand("verify-paper", "run every published check end-to-end");
    verify->add_option("--data", opt.data_dir, "dataset directory override");
    verify->add_option("--threads", opt.threads, "worker threads");

    CLI11_PARSE(app, argc, argv);

    try {
        if (dump_m > 0) return cmd_dump_field(dump_m);
        if (count->parsed()) return cmd_count(opt);
        if (nl->parsed()) return cmd_nl_check(opt);
        if (charp->parsed()) return cmd_charpoly(tsv_path);
        if (apolar->parsed()) return cmd_apolar(apolar_name, opt.data_dir);
        if (mv->parsed()) return cmd_mvee(sextic_path);
        if (fl->parsed()) return cmd_find_lines(opt);
        if (verify->parsed()) return cmd_verify_paper(opt.data_dir, opt.threads);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    std::cout << app.help();
    return 0;
}
