#include "ergogap/cli/statefile.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>
#include <variant>

#include <json.hpp>

#include "ergogap/errors.hpp"
#include "ergogap/states.hpp"

namespace ergogap::cli {

namespace {

using nlohmann::json;
using PathToken = std::variant<std::string, std::size_t>;
using JsonPath = std::vector<PathToken>;

constexpr double kRenormalizeThreshold = 1e-10;

std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t offset) {
    offset = std::min(offset, text.size());
    std::size_t line = 1, column = 1;
    for (std::size_t i = 0; i < offset; ++i) {
        if (text[i] == '\n') {
            ++line;
            column = 1;
        } else {
            ++column;
        }
    }
    return {line, column};
}

// Finds the byte offset of the value at `path` in already-validated JSON
// text; nlohmann::json keeps no source positions.
class Locator {
public:
    explicit Locator(std::string_view text) : text_(text) {}

    std::size_t find(const JsonPath& path) {
        pos_ = 0;
        skip_ws();
        std::size_t best = pos_;
        for (const auto& token : path) {
            if (!descend(token)) return best;
            best = pos_;
        }
        return best;
    }

private:
    bool descend(const PathToken& token) {
        if (pos_ >= text_.size()) return false;
        if (const auto* key = std::get_if<std::string>(&token)) {
            if (text_[pos_] != '{') return false;
            ++pos_;
            for (;;) {
                skip_ws();
                if (pos_ >= text_.size() || text_[pos_] != '"') return false;
                const std::size_t key_start = pos_ + 1;
                skip_string();
                const std::string_view name = text_.substr(key_start, pos_ - 1 - key_start);
                skip_ws();
                ++pos_;  // ':'
                skip_ws();
                if (name == *key) return true;
                skip_value();
                skip_ws();
                if (pos_ >= text_.size() || text_[pos_] != ',') return false;
                ++pos_;
            }
        }
        const std::size_t index = std::get<std::size_t>(token);
        if (text_[pos_] != '[') return false;
        ++pos_;
        for (std::size_t i = 0;; ++i) {
            skip_ws();
            if (pos_ >= text_.size() || text_[pos_] == ']') return false;
            if (i == index) return true;
            skip_value();
            skip_ws();
            if (pos_ >= text_.size() || text_[pos_] != ',') return false;
            ++pos_;
        }
    }

    void skip_ws() {
        while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\n' || text_[pos_] == '\r' || text_[pos_] == '\t'))
            ++pos_;
    }

    void skip_string() {
        ++pos_;  // opening quote
        while (pos_ < text_.size() && text_[pos_] != '"') pos_ += text_[pos_] == '\\' ? 2 : 1;
        ++pos_;
    }

    void skip_value() {
        if (pos_ >= text_.size()) return;
        const char c = text_[pos_];
        if (c == '"') {
            skip_string();
        } else if (c == '{' || c == '[') {
            const char close = c == '{' ? '}' : ']';
            ++pos_;
            skip_ws();
            if (pos_ < text_.size() && text_[pos_] == close) {
                ++pos_;
                return;
            }
            for (;;) {
                skip_ws();
                if (c == '{') {
                    skip_string();
                    skip_ws();
                    ++pos_;
                    skip_ws();
                }
                skip_value();
                skip_ws();
                if (pos_ >= text_.size()) return;
                if (text_[pos_++] == close) return;
            }
        } else {
            while (pos_ < text_.size() && text_[pos_] != ',' && text_[pos_] != '}' && text_[pos_] != ']' &&
                   text_[pos_] != ' ' && text_[pos_] != '\n' && text_[pos_] != '\r' && text_[pos_] != '\t')
                ++pos_;
        }
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

std::string path_string(const JsonPath& path) {
    std::string out;
    for (const auto& token : path) {
        out += '/';
        if (const auto* key = std::get_if<std::string>(&token)) {
            out += *key;
        } else {
            out += std::to_string(std::get<std::size_t>(token));
        }
    }
    return out.empty() ? "/" : out;
}

class Reader {
public:
    Reader(std::string_view text, std::string source) : text_(text), source_(std::move(source)) {}

    [[noreturn]] void fail(const JsonPath& path, const std::string& message) const {
        Locator locator(text_);
        const auto [line, column] = line_column(text_, locator.find(path));
        throw InputError(source_, line, column, message + " (at " + path_string(path) + ")");
    }

    StateFile read() {
        json root;
        try {
            root = json::parse(text_);
        } catch (const json::parse_error& e) {
            const std::size_t offset = e.byte > 0 ? e.byte - 1 : 0;
            const auto [line, column] = line_column(text_, offset);
            throw InputError(source_, line, column, std::string("malformed JSON: ") + e.what());
        }

        StateFile file;
        if (root.is_array()) {
            read_list(root, {}, file);
        } else if (root.is_object() && root.contains("states")) {
            check_version(root, {});
            if (!root["states"].is_array()) fail({"states"}, "\"states\" must be an array");
            read_list(root["states"], {"states"}, file);
        } else if (root.is_object()) {
            file.states.push_back(read_state(root, {}, 0, file));
        } else {
            fail({}, "expected a state object, an array of states, or {\"states\": [...]}");
        }
        if (file.states.empty()) fail({}, "no states in file");
        return file;
    }

private:
    void read_list(const json& list, const JsonPath& base, StateFile& file) {
        for (std::size_t i = 0; i < list.size(); ++i) {
            JsonPath path = base;
            path.emplace_back(i);
            file.states.push_back(read_state(list[i], path, i, file));
        }
    }

    void check_version(const json& obj, const JsonPath& path) {
        if (!obj.contains("version")) return;
        const json& v = obj["version"];
        if (!v.is_number_integer() || v.get<long long>() != kStateFileVersion) {
            fail(child(path, "version"), "unsupported state file version (expected " +
                                             std::to_string(kStateFileVersion) + ")");
        }
    }

    static JsonPath child(JsonPath path, PathToken token) {
        path.push_back(std::move(token));
        return path;
    }

    double number(const json& v, const JsonPath& path) const {
        if (!v.is_number()) fail(path, "expected a number");
        const double d = v.get<double>();
        if (!std::isfinite(d)) fail(path, "expected a finite number");
        return d;
    }

    int integer(const json& v, const JsonPath& path) const {
        if (!v.is_number_integer()) fail(path, "expected an integer");
        const long long i = v.get<long long>();
        if (i < -1000000 || i > 1000000) fail(path, "integer out of range");
        return static_cast<int>(i);
    }

    Complex complex_value(const json& v, const JsonPath& path) const {
        if (v.is_number()) return {number(v, path), 0.0};
        if (v.is_array() && v.size() == 2) return {number(v[0], child(path, std::size_t{0})), number(v[1], child(path, std::size_t{1}))};
        fail(path, "expected a complex number as [re, im] or a real number");
    }

    const json& field(const json& obj, const JsonPath& path, const char* name) const {
        if (!obj.contains(name)) fail(path, std::string("missing field \"") + name + "\"");
        return obj[name];
    }

    std::vector<double> reals(const json& v, const JsonPath& path) const {
        if (!v.is_array()) fail(path, "expected an array of numbers");
        std::vector<double> out;
        for (std::size_t i = 0; i < v.size(); ++i) out.push_back(number(v[i], child(path, i)));
        return out;
    }

    StateEntry read_state(const json& obj, const JsonPath& path, std::size_t index, StateFile& file) {
        if (!obj.is_object()) fail(path, "state must be a JSON object");
        check_version(obj, path);

        StateEntry entry{"state-" + std::to_string(index), "", 1.0, StateVector::basis(1, 0)};
        if (obj.contains("id")) {
            if (!obj["id"].is_string()) fail(child(path, "id"), "\"id\" must be a string");
            entry.id = obj["id"].get<std::string>();
        }
        if (obj.contains("energy_unit")) {
            entry.energy_unit = number(obj["energy_unit"], child(path, "energy_unit"));
            if (!(entry.energy_unit > 0.0)) fail(child(path, "energy_unit"), "energy unit must be positive");
        }
        std::optional<int> n_qubits;
        if (obj.contains("n_qubits")) {
            n_qubits = integer(obj["n_qubits"], child(path, "n_qubits"));
            if (*n_qubits < 1 || *n_qubits > 20) fail(child(path, "n_qubits"), "n_qubits must lie in 1..20");
        }

        const bool has_amplitudes = obj.contains("amplitudes");
        const bool has_family = obj.contains("family");
        if (has_amplitudes == has_family) fail(path, "state needs exactly one of \"amplitudes\" or \"family\"");

        if (has_amplitudes) {
            entry.family = "amplitudes";
            if (!n_qubits) fail(path, "missing field \"n_qubits\" (required with amplitudes)");
            entry.state = read_amplitudes(obj["amplitudes"], child(path, "amplitudes"), *n_qubits, entry.id, file);
        } else {
            entry.state = read_family(obj["family"], child(path, "family"), entry.family);
            if (n_qubits && *n_qubits != entry.state.n_qubits()) {
                fail(child(path, "n_qubits"), "n_qubits " + std::to_string(*n_qubits) + " does not match the family (" +
                                                  std::to_string(entry.state.n_qubits()) + " qubits)");
            }
        }
        return entry;
    }

    StateVector read_amplitudes(const json& v, const JsonPath& path, int n, const std::string& id, StateFile& file) {
        if (!v.is_array()) fail(path, "\"amplitudes\" must be an array");
        const std::size_t dim = std::size_t{1} << n;
        if (v.size() != dim) {
            fail(path, "expected " + std::to_string(dim) + " amplitudes for " + std::to_string(n) + " qubits, got " +
                           std::to_string(v.size()));
        }
        CVector amps(static_cast<Eigen::Index>(dim));
        for (std::size_t i = 0; i < dim; ++i) amps(static_cast<Eigen::Index>(i)) = complex_value(v[i], child(path, i));
        const double norm2 = amps.squaredNorm();
        if (!(norm2 > 0.0)) fail(path, "amplitudes are all zero");
        if (std::abs(norm2 - 1.0) <= kRenormalizeThreshold) return StateVector(n, std::move(amps));

        Locator locator(text_);
        const auto [line, column] = line_column(text_, locator.find(path));
        std::ostringstream msg;
        msg << source_ << ":" << line << ":" << column << ": warning: state '" << id << "' has squared norm "
            << norm2 << "; renormalized";
        file.warnings.push_back(msg.str());
        return StateVector::normalized(n, std::move(amps));
    }

    StateVector read_family(const json& fam, const JsonPath& path, std::string& name_out) {
        if (!fam.is_object()) fail(path, "\"family\" must be an object");
        const json& name_json = field(fam, path, "name");
        if (!name_json.is_string()) fail(child(path, "name"), "family name must be a string");
        const std::string name = name_json.get<std::string>();
        name_out = name;
        try {
            if (name == "ghz") {
                const int n = integer(field(fam, path, "n"), child(path, "n"));
                const double theta = number(field(fam, path, "theta"), child(path, "theta"));
                if (!(theta > 0.0 && theta <= std::numbers::pi / 4 + 1e-12)) {
                    fail(child(path, "theta"), "theta must lie in (0, pi/4]");
                }
                return ghz_general(n, theta);
            }
            if (name == "w") {
                const auto coeffs = reals(field(fam, path, "coeffs"), child(path, "coeffs"));
                return w_general(coeffs);
            }
            if (name == "dicke") {
                const int n = integer(field(fam, path, "n"), child(path, "n"));
                const int l = integer(field(fam, path, "l"), child(path, "l"));
                if (l < 1 || l > n - 1) fail(child(path, "l"), "l must lie in 1..n-1");
                return dicke(n, l);
            }
            if (name == "dicke_general") {
                const int n = integer(field(fam, path, "n"), child(path, "n"));
                const int l = integer(field(fam, path, "l"), child(path, "l"));
                const auto alphas = reals(field(fam, path, "alphas"), child(path, "alphas"));
                return dicke_general(n, l, alphas);
            }
            if (name == "product") {
                const json& locals_json = field(fam, path, "locals");
                const JsonPath locals_path = child(path, "locals");
                if (!locals_json.is_array()) fail(locals_path, "\"locals\" must be an array of [c0, c1] pairs");
                std::vector<std::array<Complex, 2>> locals;
                for (std::size_t i = 0; i < locals_json.size(); ++i) {
                    const JsonPath p = child(locals_path, i);
                    const json& local = locals_json[i];
                    if (!local.is_array() || local.size() != 2) fail(p, "local state must be [c0, c1]");
                    locals.push_back({complex_value(local[0], child(p, std::size_t{0})),
                                      complex_value(local[1], child(p, std::size_t{1}))});
                }
                return product_state(locals);
            }
        } catch (const InputError&) {
            throw;
        } catch (const std::exception& e) {
            fail(path, std::string("invalid ") + name + " parameters: " + e.what());
        }
        fail(child(path, "name"), "unknown family \"" + name + "\" (expected ghz, w, dicke, dicke_general, product)");
    }

    std::string_view text_;
    std::string source_;
};

}  // namespace

InputError::InputError(std::string source, std::size_t line, std::size_t column, const std::string& message)
    : std::runtime_error(source + ":" + std::to_string(line) + ":" + std::to_string(column) + ": " + message),
      source_(std::move(source)), line_(line), column_(column) {}

StateFile parse_state_file(std::string_view text, const std::string& source_name) {
    return Reader(text, source_name).read();
}

StateFile load_state_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError(path.string(), 0, 0, "cannot open file");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_state_file(buffer.str(), path.string());
}

std::string write_state_file(const std::vector<StateEntry>& states) {
    json root;
    root["version"] = kStateFileVersion;
    root["states"] = json::array();
    for (const auto& entry : states) {
        json s;
        s["id"] = entry.id;
        s["n_qubits"] = entry.state.n_qubits();
        s["energy_unit"] = entry.energy_unit;
        json amps = json::array();
        for (std::size_t i = 0; i < entry.state.dim(); ++i) amps.push_back({entry.state[i].real(), entry.state[i].imag()});
        s["amplitudes"] = std::move(amps);
        root["states"].push_back(std::move(s));
    }
    return root.dump(2) + "\n";
}

}  // namespace ergogap::cli
