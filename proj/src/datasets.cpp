#include "cubic/datasets.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "cubic/errors.hpp"

namespace cubic {

namespace {

// published reference point counts #X(F_{2^m}), m = 1..11
const long long COUNTS_THM1[11] = {
    31,          389,          4681,          69521,         1082401,
    17040449,    270491777,    4311818497ll,  68854546945ll, 1100584649729ll,
    17600762873857ll};
const long long COUNTS_THM2[11] = {
    31,          309,          4585,          69905,         1082401,
    17050689,    270577793,    4312006913ll,  68854448641ll, 1100596118529ll,
    17600774408193ll};
const long long COUNTS_THM3[11] = {
    33,          297,          4641,          70945,         1084033,
    17057409,    270525953,    4311720449ll,  68853843969ll, 1100585936897ll,
    17600759586817ll};

// published characteristic polynomials, coefficient of t^k at index k
std::vector<Rat> charpoly_thm1() {
    std::vector<Rat> c(23, 0);
    c[22] = 1;
    c[20] = Rat(-3, 2);
    c[18] = Rat(3, 2);
    c[16] = -1;
    c[15] = Rat(1, 2);
    c[14] = Rat(1, 2);
    c[13] = -1;
    c[11] = Rat(3, 2);
    c[9] = -1;
    c[8] = Rat(1, 2);
    c[7] = Rat(1, 2);
    c[6] = -1;
    c[4] = Rat(3, 2);
    c[2] = Rat(-3, 2);
    c[0] = 1;
    return c;
}

std::vector<Rat> charpoly_thm2() {
    std::vector<Rat> c(23, 0);
    c[22] = 1;
    c[20] = 1;
    c[19] = Rat(1, 2);
    c[18] = Rat(1, 2);
    c[17] = Rat(1, 2);
    c[14] = Rat(-1, 2);
    c[13] = Rat(-1, 2);
    c[12] = Rat(-3, 2);
    c[11] = Rat(-1, 2);
    c[10] = Rat(-3, 2);
    c[9] = Rat(-1, 2);
    c[8] = Rat(-1, 2);
    c[5] = Rat(1, 2);
    c[4] = Rat(1, 2);
    c[3] = Rat(1, 2);
    c[2] = 1;
    c[0] = 1;
    return c;
}

std::vector<Rat> charpoly_thm3() {
    std::vector<Rat> c(23, 0);
    c[22] = 1;
    c[21] = Rat(-1, 2);
    c[20] = Rat(3, 2);
    c[19] = Rat(-1, 2);
    c[16] = Rat(-3, 2);
    c[15] = Rat(1, 2);
    c[14] = -1;
    c[13] = Rat(1, 2);
    c[12] = Rat(1, 2);
    c[11] = Rat(1, 2);
    c[10] = Rat(1, 2);
    c[9] = Rat(1, 2);
    c[8] = -1;
    c[7] = Rat(1, 2);
    c[6] = Rat(-3, 2);
    c[3] = Rat(-1, 2);
    c[2] = Rat(3, 2);
    c[1] = Rat(-1, 2);
    c[0] = 1;
    return c;
}

// frozen FNV-1a checksums of the shipped polynomials in canonical form;
// a single mistyped coefficient would silently change every count, so the
// loader refuses files that do not match.  CUBIC_FREEZE_CHECKSUMS=1 in the
// environment prints the actual values instead (maintenance aid).
const std::map<std::string, uint64_t> CHECKSUMS = {
    {"thm1_f", 0x2f82757ff11be0efull},   {"thm1_g", 0x083267c191188057ull},
    {"thm1_ideal", 0x2678754c40d2c760ull}, {"thm2_f", 0x4fb8fdbe7e0328bcull},
    {"thm2_ideal", 0xf119a696f5ccd788ull}, {"thm3_f", 0xc9825e5cda214804ull},
    {"thm3_ideal", 0xf19798742ecf97c3ull},
};

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw dataset_error("cannot open dataset file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::vector<std::string> content_lines(const std::string& text) {
    std::istringstream in(text);
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
        auto pos = line.find('#');
        if (pos != std::string::npos) line.erase(pos);
        bool blank = true;
        for (char ch : line)
            if (!std::isspace((unsigned char)ch)) { blank = false; break; }
        if (!blank) lines.push_back(line);
    }
    return lines;
}

std::string strip_comments(const std::string& text) {
    std::string joined;
    for (auto& l : content_lines(text)) {
        joined += l;
        joined += '\n';
    }
    return joined;
}

void verify_checksum(const std::string& key, uint64_t actual) {
    auto it = CHECKSUMS.find(key);
    if (it == CHECKSUMS.end())
        throw dataset_error("no frozen checksum for " + key);
    if (std::getenv("CUBIC_FREEZE_CHECKSUMS")) {
        char buf[64];
        std::snprintf(buf, sizeof buf, "{\"%s\", 0x%016llxull},", key.c_str(),
                      (unsigned long long)actual);
        std::fputs(buf, stderr);
        std::fputc('\n', stderr);
        return;
    }
    if (it->second != actual)
        throw dataset_error("checksum mismatch in dataset " + key +
                            ": the shipped file was altered");
}

uint64_t list_checksum(const std::vector<MPolyQ>& polys) {
    uint64_t h = 14695981039346656037ull;
    for (auto& p : polys) {
        for (unsigned char ch : p.to_string()) {
            h ^= ch;
            h *= 1099511628211ull;
        }
        h ^= '\n';
        h *= 1099511628211ull;
    }
    return h;
}

std::vector<MPolyQ> parse_substitution(const std::string& text) {
    std::vector<MPolyQ> images;
    for (int i = 0; i < 6; ++i) images.push_back(MPolyQ::variable(6, i, 'y'));
    for (auto& line : content_lines(text)) {
        auto eq = line.find('=');
        if (eq == std::string::npos)
            throw dataset_error("substitution line without '=': " + line);
        MPolyQ lhs = parse_mpoly_q(line.substr(0, eq), 6, 'y');
        if (lhs.term_count() != 1 || lhs.degree() != 1)
            throw dataset_error("substitution target must be a single variable");
        int var = -1;
        for (auto& [e, c] : lhs.terms()) {
            if (c != 1) throw dataset_error("substitution target must be unscaled");
            for (int i = 0; i < 6; ++i)
                if (e[i] == 1) var = i;
        }
        images[var] = parse_mpoly_q(line.substr(eq + 1), 6, 'y');
    }
    return images;
}

} // namespace

std::vector<std::string> dataset_names() { return {"thm1", "thm2", "thm3"}; }

std::string default_data_dir() {
#ifdef CUBIC_DEFAULT_DATA_DIR
    return CUBIC_DEFAULT_DATA_DIR;
#else
    return "data";
#endif
}

Dataset load_dataset(const std::string& name, const std::string& data_dir) {
    bool known = false;
    for (auto& n : dataset_names())
        if (n == name) known = true;
    if (!known) throw dataset_error("unknown dataset: " + name);
    std::string dir = data_dir.empty() ? default_data_dir() : data_dir;

    Dataset ds;
    ds.name = name;
    ds.f = parse_mpoly_q(strip_comments(read_file(dir + "/" + name + "_f.txt")), 6, 'y');
    verify_checksum(name + "_f", poly_checksum(ds.f));

    if (name == "thm1") {
        ds.g = parse_mpoly_q(strip_comments(read_file(dir + "/thm1_g.txt")), 3, 'x');
        verify_checksum("thm1_g", poly_checksum(*ds.g));
    }

    ds.subst_images = parse_substitution(read_file(dir + "/" + name + "_subst.txt"));
    ds.f_good = substitute_linear(ds.f, ds.subst_images);
    ds.f_mod2 = reduce_mod2(ds.f_good);

    for (auto& line : content_lines(read_file(dir + "/" + name + "_ideal.txt")))
        ds.ideal.push_back(parse_mpoly_q(line, 6, 'y'));
    verify_checksum(name + "_ideal", list_checksum(ds.ideal));

    const long long* counts = name == "thm1"   ? COUNTS_THM1
                              : name == "thm2" ? COUNTS_THM2
                                               : COUNTS_THM3;
    ds.expected_counts.assign(counts, counts + 11);
    ds.expected_charpoly = name == "thm1"   ? charpoly_thm1()
                           : name == "thm2" ? charpoly_thm2()
                                            : charpoly_thm3();
    return ds;
}

} // namespace cubic
