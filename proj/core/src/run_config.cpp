#include "infobridge/run_config.hpp"

#include <cctype>
#include <cmath>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <variant>
#include <vector>

#include "infobridge/errors.hpp"

namespace infobridge {

namespace {

struct PairValue {
    double first;
    double second;
};

// scalar | string | list of scalars or pairs
struct Value {
    int line = 0;
    std::variant<double, std::string, std::vector<PairValue>, std::vector<double>> data;
};

struct Token {
    enum Type { Ident, Number, String, Symbol, End } type = End;
    std::string text;
    double number = 0.0;
    int line = 1;
};

class Lexer {
public:
    explicit Lexer(const std::string& text) : text_(text) {}

    Token next() {
        skip_space();
        Token tok;
        tok.line = line_;
        if (pos_ >= text_.size()) return tok;
        const char c = text_[pos_];
        if (c == '{' || c == '}' || c == '[' || c == ']' || c == '=' || c == ',' || c == ':') {
            tok.type = Token::Symbol;
            tok.text = std::string(1, c);
            ++pos_;
            return tok;
        }
        if (c == '"') {
            ++pos_;
            std::string s;
            while (pos_ < text_.size() && text_[pos_] != '"') {
                if (text_[pos_] == '\n') throw ConfigError("unterminated string", line_);
                s += text_[pos_++];
            }
            if (pos_ >= text_.size()) throw ConfigError("unterminated string", line_);
            ++pos_;
            tok.type = Token::String;
            tok.text = std::move(s);
            return tok;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '+' || c == '.') {
            const std::size_t start = pos_;
            while (pos_ < text_.size() &&
                   (std::isdigit(static_cast<unsigned char>(text_[pos_])) ||
                    text_[pos_] == '.' || text_[pos_] == '-' || text_[pos_] == '+' ||
                    text_[pos_] == 'e' || text_[pos_] == 'E'))
                ++pos_;
            const std::string s = text_.substr(start, pos_ - start);
            try {
                std::size_t used = 0;
                tok.number = std::stod(s, &used);
                if (used != s.size()) throw std::invalid_argument(s);
            } catch (const std::exception&) {
                throw ConfigError("malformed number '" + s + "'", line_);
            }
            tok.type = Token::Number;
            tok.text = s;
            return tok;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            const std::size_t start = pos_;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
                ++pos_;
            tok.type = Token::Ident;
            tok.text = text_.substr(start, pos_ - start);
            return tok;
        }
        throw ConfigError(std::string("unexpected character '") + c + "'", line_);
    }

private:
    void skip_space() {
        while (pos_ < text_.size()) {
            const char c = text_[pos_];
            if (c == '\n') {
                ++line_;
                ++pos_;
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                ++pos_;
            } else if (c == '#') {
                while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
            } else {
                break;
            }
        }
    }

    const std::string& text_;
    std::size_t pos_ = 0;
    int line_ = 1;
};

using KeyValues = std::map<std::string, Value>;

class Parser {
public:
    explicit Parser(const std::string& text) : lexer_(text) { advance(); }

    // statements: ident '{' kv* '}'  |  ident '=' value
    void parse(std::map<std::string, KeyValues>& blocks, KeyValues& top) {
        while (tok_.type != Token::End) {
            expect(Token::Ident, "a block or key name");
            const std::string name = tok_.text;
            const int line = tok_.line;
            advance();
            if (is_symbol("{")) {
                advance();
                KeyValues kv;
                parse_kv_list(kv, "}");
                if (blocks.count(name)) throw ConfigError("duplicate block '" + name + "'", line);
                blocks.emplace(name, std::move(kv));
                advance();  // consume '}'
            } else if (is_symbol("=")) {
                advance();
                Value v = parse_value();
                if (top.count(name)) throw ConfigError("duplicate key '" + name + "'", line);
                v.line = line;
                top.emplace(name, std::move(v));
            } else {
                throw ConfigError("expected '{' or '=' after '" + name + "'", tok_.line);
            }
        }
    }

private:
    void parse_kv_list(KeyValues& kv, const std::string& closer) {
        while (!is_symbol(closer)) {
            if (tok_.type == Token::End) throw ConfigError("unterminated block", tok_.line);
            if (is_symbol(",")) {
                advance();
                continue;
            }
            expect(Token::Ident, "a key name");
            const std::string key = tok_.text;
            const int line = tok_.line;
            advance();
            if (!is_symbol("=")) throw ConfigError("expected '=' after '" + key + "'", tok_.line);
            advance();
            Value v = parse_value();
            if (kv.count(key)) throw ConfigError("duplicate key '" + key + "'", line);
            v.line = line;
            kv.emplace(key, std::move(v));
        }
    }

    Value parse_value() {
        Value v;
        v.line = tok_.line;
        if (tok_.type == Token::Number) {
            v.data = tok_.number;
            advance();
            return v;
        }
        if (tok_.type == Token::String) {
            v.data = tok_.text;
            advance();
            return v;
        }
        if (is_symbol("[")) {
            advance();
            std::vector<PairValue> pairs;
            std::vector<double> scalars;
            bool saw_pair = false;
            while (!is_symbol("]")) {
                if (tok_.type == Token::End) throw ConfigError("unterminated list", tok_.line);
                if (is_symbol(",")) {
                    advance();
                    continue;
                }
                if (tok_.type != Token::Number)
                    throw ConfigError("lists may contain numbers or t:value pairs", tok_.line);
                const double first = tok_.number;
                advance();
                if (is_symbol(":")) {
                    advance();
                    if (tok_.type != Token::Number)
                        throw ConfigError("expected a number after ':'", tok_.line);
                    pairs.push_back({first, tok_.number});
                    saw_pair = true;
                    advance();
                } else {
                    scalars.push_back(first);
                }
            }
            advance();  // consume ']'
            if (saw_pair && !scalars.empty())
                throw ConfigError("list mixes scalars and pairs", v.line);
            if (saw_pair)
                v.data = std::move(pairs);
            else
                v.data = std::move(scalars);
            return v;
        }
        throw ConfigError("expected a number, string or list", tok_.line);
    }

    bool is_symbol(const std::string& s) const {
        return tok_.type == Token::Symbol && tok_.text == s;
    }

    void expect(Token::Type type, const std::string& what) const {
        if (tok_.type != type)
            throw ConfigError("expected " + what, tok_.line);
    }

    void advance() { tok_ = lexer_.next(); }

    Lexer lexer_;
    Token tok_;
};

double require_number(const KeyValues& kv, const std::string& key, int block_line) {
    const auto it = kv.find(key);
    if (it == kv.end()) throw ConfigError("missing key '" + key + "'", block_line);
    if (!std::holds_alternative<double>(it->second.data))
        throw ConfigError("key '" + key + "' must be a number", it->second.line);
    return std::get<double>(it->second.data);
}

std::optional<double> optional_number(const KeyValues& kv, const std::string& key) {
    const auto it = kv.find(key);
    if (it == kv.end()) return std::nullopt;
    if (!std::holds_alternative<double>(it->second.data))
        throw ConfigError("key '" + key + "' must be a number", it->second.line);
    return std::get<double>(it->second.data);
}

void reject_unknown(const KeyValues& kv, std::initializer_list<const char*> known,
                    const std::string& where) {
    for (const auto& [key, value] : kv) {
        bool ok = false;
        for (const char* k : known)
            if (key == k) ok = true;
        if (!ok) throw ConfigError("unknown key '" + key + "' in " + where, value.line);
    }
}

DefaultLaw parse_law(const KeyValues& kv, int line) {
    const auto it = kv.find("kind");
    if (it == kv.end()) throw ConfigError("law block needs a 'kind'", line);
    if (!std::holds_alternative<std::string>(it->second.data))
        throw ConfigError("law kind must be a string", it->second.line);
    const std::string kind = std::get<std::string>(it->second.data);
    try {
        if (kind == "exponential") {
            reject_unknown(kv, {"kind", "rate"}, "law");
            return DefaultLaw::exponential(require_number(kv, "rate", line));
        }
        if (kind == "uniform") {
            reject_unknown(kv, {"kind", "a", "b"}, "law");
            return DefaultLaw::uniform_interval(require_number(kv, "a", line),
                                                require_number(kv, "b", line));
        }
        if (kind == "weibull") {
            reject_unknown(kv, {"kind", "shape", "scale"}, "law");
            return DefaultLaw::weibull(require_number(kv, "shape", line),
                                       require_number(kv, "scale", line));
        }
        if (kind == "atoms") {
            reject_unknown(kv, {"kind", "points"}, "law");
            const auto pit = kv.find("points");
            if (pit == kv.end() ||
                !std::holds_alternative<std::vector<PairValue>>(pit->second.data))
                throw ConfigError("atoms law needs points = [r:w, ...]", line);
            std::vector<Atom> atoms;
            for (const auto& p : std::get<std::vector<PairValue>>(pit->second.data))
                atoms.push_back({p.first, p.second});
            return DefaultLaw::discrete_atoms(std::move(atoms));
        }
        if (kind == "piecewise") {
            reject_unknown(kv, {"kind", "knots"}, "law");
            const auto pit = kv.find("knots");
            if (pit == kv.end() ||
                !std::holds_alternative<std::vector<PairValue>>(pit->second.data))
                throw ConfigError("piecewise law needs knots = [t:F, ...]", line);
            std::vector<CdfKnot> knots;
            for (const auto& p : std::get<std::vector<PairValue>>(pit->second.data))
                knots.push_back({p.first, p.second});
            return DefaultLaw::piecewise_empirical(std::move(knots));
        }
    } catch (const DomainError& e) {
        throw ConfigError(std::string("invalid law: ") + e.what(), line);
    }
    throw ConfigError("unknown law kind '" + kind + "'", it->second.line);
}

Recovery parse_recovery(const Value& v) {
    if (std::holds_alternative<double>(v.data))
        return Recovery::constant(std::get<double>(v.data));
    if (std::holds_alternative<std::vector<PairValue>>(v.data)) {
        std::vector<std::pair<double, double>> pts;
        for (const auto& p : std::get<std::vector<PairValue>>(v.data))
            pts.emplace_back(p.first, p.second);
        return Recovery::piecewise_linear(std::move(pts));
    }
    throw ConfigError("recovery must be a scalar or a [t:value, ...] list", v.line);
}

}  // namespace

RunConfig parse_config_text(const std::string& text) {
    std::map<std::string, KeyValues> blocks;
    KeyValues top;
    Parser parser(text);
    parser.parse(blocks, top);

    for (const auto& [name, kv] : blocks)
        if (name != "law" && name != "grid" && name != "contract" && name != "mc")
            throw ConfigError("unknown block '" + name + "'",
                              kv.empty() ? 0 : kv.begin()->second.line);
    reject_unknown(top, {"seed", "out_dir"}, "the top level");

    RunConfig cfg;
    if (const auto it = blocks.find("law"); it != blocks.end())
        cfg.law = parse_law(it->second, it->second.empty() ? 0 : it->second.begin()->second.line);

    if (const auto it = blocks.find("grid"); it != blocks.end()) {
        const auto& kv = it->second;
        reject_unknown(kv, {"t_max", "dt"}, "grid");
        if (auto v = optional_number(kv, "t_max")) cfg.grid_t_max = *v;
        if (auto v = optional_number(kv, "dt")) cfg.grid_dt = *v;
        const int line = kv.empty() ? 0 : kv.begin()->second.line;
        if (!(cfg.grid_dt > 0.0)) throw ConfigError("grid dt must be positive", line);
        if (!(cfg.grid_t_max > 0.0)) throw ConfigError("grid t_max must be positive", line);
    }

    if (const auto it = blocks.find("contract"); it != blocks.end()) {
        const auto& kv = it->second;
        reject_unknown(kv, {"maturity", "kappa", "recovery", "discount_rate"}, "contract");
        const int line = kv.empty() ? 0 : kv.begin()->second.line;
        if (auto v = optional_number(kv, "maturity")) cfg.contract.maturity = *v;
        if (auto v = optional_number(kv, "kappa")) cfg.contract.kappa = *v;
        if (auto v = optional_number(kv, "discount_rate")) cfg.contract.discount_rate = *v;
        if (const auto rit = kv.find("recovery"); rit != kv.end())
            cfg.contract.recovery = parse_recovery(rit->second);
        try {
            cfg.contract.validate();
        } catch (const DomainError& e) {
            throw ConfigError(std::string("invalid contract: ") + e.what(), line);
        }
    }

    if (const auto it = blocks.find("mc"); it != blocks.end()) {
        const auto& kv = it->second;
        reject_unknown(kv, {"n_paths", "bin_width"}, "mc");
        const int line = kv.empty() ? 0 : kv.begin()->second.line;
        if (auto v = optional_number(kv, "n_paths")) {
            if (!(*v >= 1.0) || *v != std::floor(*v))
                throw ConfigError("n_paths must be a positive integer", line);
            cfg.mc_n_paths = static_cast<std::size_t>(*v);
        }
        if (auto v = optional_number(kv, "bin_width")) {
            if (!(*v > 0.0)) throw ConfigError("bin_width must be positive", line);
            cfg.mc_bin_width = *v;
        }
    }

    if (const auto it = top.find("seed"); it != top.end()) {
        if (!std::holds_alternative<double>(it->second.data))
            throw ConfigError("seed must be a number", it->second.line);
        const double s = std::get<double>(it->second.data);
        if (s < 0.0 || s != std::floor(s))
            throw ConfigError("seed must be a nonnegative integer", it->second.line);
        cfg.seed = static_cast<std::uint64_t>(s);
    }
    if (const auto it = top.find("out_dir"); it != top.end()) {
        if (!std::holds_alternative<std::string>(it->second.data))
            throw ConfigError("out_dir must be a string", it->second.line);
        cfg.out_dir = std::get<std::string>(it->second.data);
    }
    return cfg;
}

RunConfig parse_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_config_text(ss.str());
}

}  // namespace infobridge
