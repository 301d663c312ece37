#include <openssl/evp.h>

#include <fstream>
#include <iomanip>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "bent3/int_math.hpp"
#include "bent3_cli.hpp"

namespace bent3::cli {

namespace {
constexpr std::size_t kRowWidth = 81;
}

void write_table(std::ostream& os, const TernaryFn& f) {
    os << "TBF v1\n";
    os << "n=" << f.field().degree() << " modulus=" << f.field().modulus_string() << "\n";
    std::string row;
    for (std::uint32_t x = 0; x < f.size(); ++x) {
        row.push_back(static_cast<char>('0' + f.at(x)));
        if (row.size() == kRowWidth) {
            os << row << "\n";
            row.clear();
        }
    }
    if (!row.empty()) os << row << "\n";
}

TernaryFn read_table(std::istream& is) {
    std::string line;
    if (!std::getline(is, line) || line != "TBF v1") throw std::invalid_argument("table: missing 'TBF v1' header");
    if (!std::getline(is, line)) throw std::invalid_argument("table: missing field line");

    int n = 0;
    std::string modulus;
    {
        std::istringstream ls(line);
        std::string a, b;
        ls >> a >> b;
        if (a.rfind("n=", 0) != 0 || b.rfind("modulus=", 0) != 0) throw std::invalid_argument("table: malformed field line");
        try {
            n = std::stoi(a.substr(2));
        } catch (const std::exception&) {
            throw std::invalid_argument("table: bad n");
        }
        modulus = b.substr(8);
    }
    const FieldRef ctx = FieldCtx::create(n, parse_modulus(modulus), kHardMaxDegree);

    std::vector<std::uint8_t> values;
    values.reserve(ctx->size());
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        for (char ch : line) {
            if (ch < '0' || ch > '2') throw std::invalid_argument("table: invalid character");
            values.push_back(static_cast<std::uint8_t>(ch - '0'));
        }
    }
    if (values.size() != ctx->size())
        throw std::invalid_argument("table: expected " + std::to_string(ctx->size()) + " values, found " +
                                    std::to_string(values.size()));
    return TernaryFn(ctx, std::move(values));
}

TernaryFn read_table_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open table file '" + path + "'");
    return read_table(in);
}

std::string sha256_hex(std::string_view data) {
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr) != 1)
        throw std::runtime_error("SHA-256 failed");
    std::ostringstream os;
    os << std::hex << std::setfill('0');
    for (unsigned int i = 0; i < len; ++i) os << std::setw(2) << static_cast<int>(digest[i]);
    return os.str();
}

std::string table_sha256(const TernaryFn& f) {
    std::string s(f.size(), '0');
    for (std::uint32_t x = 0; x < f.size(); ++x) s[x] = static_cast<char>('0' + f.at(x));
    return sha256_hex(s);
}

std::string format_certificate(const Certificate& cert, const TernaryFn& f) {
    std::ostringstream os;
    os << "bent=" << (cert.is_bent ? "true" : "false") << "\n";
    os << "regularity=" << regularity_name(cert.regularity) << "\n";
    os << "degree=" << cert.degree << "\n";
    os << "dual_sha256=" << (cert.dual ? table_sha256(*cert.dual) : "none") << "\n";
    os << "counterexample=" << (cert.counterexample ? std::to_string(cert.counterexample->code) : "none") << "\n";
    os << "table_sha256=" << table_sha256(f) << "\n";
    for (const auto& n : cert.notes) os << "NOTE " << n << "\n";
    for (const auto& t : cert.transcripts) os << t << "\n";
    return os.str();
}

std::map<std::string, std::string> parse_certificate(std::istream& is) {
    std::map<std::string, std::string> kv;
    std::string line;
    while (std::getline(is, line)) {
        const auto eq = line.find('=');
        if (eq == std::string::npos || line.rfind("CHECK ", 0) == 0 || line.rfind("NOTE ", 0) == 0) continue;
        kv[line.substr(0, eq)] = line.substr(eq + 1);
    }
    return kv;
}

}  // namespace bent3::cli
