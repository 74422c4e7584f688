#include <quintic/closed_forms.hpp>
#include <quintic/driver.hpp>
#include <quintic/errors.hpp>

#include <json.hpp>

#include <fcntl.h>
#include <unistd.h>

#include <algorithm>
#include <fstream>
#include <sstream>

namespace quintic {

Rational degree_zero_invariant(int g, long chi) {
    if (g < 2)
        throw std::invalid_argument("degree_zero_invariant: formula requires g >= 2");
    Rational sign(g % 2 == 0 ? 1 : -1);
    Rational b2g = abs(bernoulli(2 * g));
    Rational b2g2 = abs(bernoulli(2 * g - 2));
    return sign * Rational(chi) / Rational(2) * b2g * b2g2 /
           (Rational(2L * g) * Rational(2L * g - 2) * Rational(factorial(2L * g - 2)));
}

namespace {

Rational lookup(const std::map<PairSet, Rational>& map, const PairSet& key,
                std::vector<std::string>& missing) {
    auto it = map.find(key);
    if (it == map.end()) {
        missing.push_back(key.str());
        return Rational(0);
    }
    return it->second;
}

} // namespace

SolveResult solve_invariant(const GdKey& key, const EquationInputs& inputs) {
    if (key.g != 2 && key.g != 3)
        throw std::invalid_argument("solve_invariant: only genus 2 and 3 are supported");
    if (inputs.key != key)
        throw std::invalid_argument("solve_invariant: inputs are for a different (g,d)");

    PairSet zeta = principal_zeta(key);
    MasterEquation eq = assemble_master(key, zeta);
    if (eq.collapsed || eq.n_coefficient.is_zero())
        throw std::domain_error(
            "solve_invariant: the combined equation has no invariant multiple");

    std::vector<std::string> missing;
    Rational acc(0);
    for (const auto& [rho, coeff] : eq.lhs_terms) {
        Rational a = lookup(inputs.a_values, rho, missing);
        Rational npt = lookup(inputs.npt_values, rho, missing);
        acc += coeff * (a - npt);
    }
    if (!missing.empty()) {
        std::sort(missing.begin(), missing.end());
        missing.erase(std::unique(missing.begin(), missing.end()), missing.end());
        std::string what = "solve_invariant: missing equation data for";
        for (const auto& s : missing) what += " " + s;
        throw MissingInput(what, missing);
    }

    SolveResult result;
    result.c_master = master_coefficient(key.g, key.d);
    result.n = acc / result.c_master;
    result.checks.push_back(
        {"master-coefficient", eq.n_coefficient == result.c_master});
    if (key.g == 2 && key.d == 1)
        for (const auto& c : check_equation_coefficients(inputs))
            result.checks.push_back(c);
    return result;
}

std::vector<Check> check_equation_coefficients(const EquationInputs& inputs) {
    if (inputs.key.g != 2 || inputs.key.d != 1)
        throw std::invalid_argument(
            "check_equation_coefficients: defined for (g,d) = (2,1) only");
    // the five standard equations and their expected invariant coefficients
    std::vector<std::pair<PairSet, Rational>> expected = {
        {PairSet({{1, 3}}), Rational(0)},
        {PairSet({{2, 2}}), Rational(0)},
        {PairSet({{3, 1}}), Rational(1)},
        {PairSet({{4, 0}}), Rational(45)},
        {PairSet({{3, 0}, {1, 0}}), Rational(293)},
    };
    std::vector<Check> report;
    for (const auto& [zeta, want] : expected) {
        bool pass = b_coefficient(inputs.key, zeta) == want;
        report.push_back({"n-coefficient " + zeta.str(), pass});
    }
    return report;
}

namespace {

[[noreturn]] void schema_error(const std::string& path, const std::string& what) {
    throw ParseError(path + ": " + what);
}

Rational rational_field(const nlohmann::json& obj, const std::string& path,
                        const char* field) {
    if (!obj.contains(field)) schema_error(path + "/" + field, "missing");
    const auto& v = obj[field];
    if (!v.is_string()) schema_error(path + "/" + field, "expected a \"p/q\" string");
    try {
        return Rational::parse(v.get<std::string>());
    } catch (const ParseError& e) {
        schema_error(path + "/" + field, e.what());
    }
}

long int_field(const nlohmann::json& obj, const std::string& path, const char* field) {
    if (!obj.contains(field)) schema_error(path + "/" + field, "missing");
    const auto& v = obj[field];
    if (!v.is_number_integer()) schema_error(path + "/" + field, "expected an integer");
    return v.get<long>();
}

} // namespace

EquationInputs parse_equation_inputs(const std::string& json_text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("/: ") + e.what());
    }
    if (!doc.is_object()) schema_error("/", "expected an object");

    EquationInputs inputs;
    inputs.key.g = static_cast<int>(int_field(doc, "", "genus"));
    inputs.key.d = static_cast<int>(int_field(doc, "", "degree"));
    inputs.chi_quintic = int_field(doc, "", "chi_quintic");

    if (!doc.contains("equations") || !doc["equations"].is_array())
        schema_error("/equations", "expected an array");
    std::size_t i = 0;
    for (const auto& eq : doc["equations"]) {
        std::string path = "/equations/" + std::to_string(i++);
        if (!eq.is_object()) schema_error(path, "expected an object");
        if (!eq.contains("zeta")) schema_error(path + "/zeta", "missing");
        PairSet zeta;
        try {
            zeta = PairSet::parse(eq["zeta"].dump());
        } catch (const ParseError& e) {
            schema_error(path + "/zeta", e.what());
        }
        inputs.a_values[zeta] = rational_field(eq, path, "A");
        inputs.npt_values[zeta] = rational_field(eq, path, "NPT");
    }
    return inputs;
}

EquationInputs load_equation_inputs(const std::filesystem::path& file) {
    std::ifstream in(file);
    if (!in) throw ParseError("cannot open input file " + file.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_equation_inputs(buf.str());
}

void record(InvariantStore& store, const GdKey& key, const Rational& value,
            const std::string& provenance) {
    auto it = store.entries.find(key);
    if (it != store.entries.end()) {
        if (it->second.value != value)
            throw IntegrityError("invariant cache: recomputed value " + value.str() +
                                 " disagrees with stored " + it->second.value.str());
        return;
    }
    store.entries[key] = {value, provenance};
}

InvariantStore load_store(const std::filesystem::path& file) {
    InvariantStore store;
    std::ifstream in(file);
    if (!in) return store;
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError("invariant cache: " + std::string(e.what()));
    }
    // bind before iterating: items() keeps a reference to its container
    const nlohmann::json entries = doc.value("entries", nlohmann::json::object());
    for (const auto& [k, v] : entries.items()) {
        auto comma = k.find(',');
        if (comma == std::string::npos)
            throw ParseError("invariant cache: bad key " + k);
        GdKey key{std::stoi(k.substr(0, comma)), std::stoi(k.substr(comma + 1))};
        store.entries[key] = {Rational::parse(v.at("N").get<std::string>()),
                              v.value("provenance", "ingested")};
    }
    return store;
}

namespace {

// Advisory single-writer lock: exclusive creation of <file>.lock, removed on
// scope exit. Readers do not take it.
class StoreLock {
    std::filesystem::path path_;

public:
    explicit StoreLock(const std::filesystem::path& store_file)
        : path_(store_file.string() + ".lock") {
        int fd = ::open(path_.c_str(), O_CREAT | O_EXCL | O_WRONLY, 0644);
        if (fd < 0)
            throw IntegrityError("invariant cache: writer lock " + path_.string() +
                                 " is already held");
        ::close(fd);
    }
    ~StoreLock() { std::filesystem::remove(path_); }
};

} // namespace

void save_store(const InvariantStore& store, const std::filesystem::path& file) {
    StoreLock lock(file);
    nlohmann::json entries = nlohmann::json::object();
    for (const auto& [key, entry] : store.entries) {
        std::string k = std::to_string(key.g) + "," + std::to_string(key.d);
        entries[k] = {{"N", entry.value.str()}, {"provenance", entry.provenance}};
    }
    std::ofstream out(file);
    if (!out) throw IntegrityError("invariant cache: cannot write " + file.string());
    out << nlohmann::json{{"entries", entries}}.dump(2) << "\n";
}

} // namespace quintic
