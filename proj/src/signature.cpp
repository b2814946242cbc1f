#include "plonka/signature.hpp"

#include <algorithm>
#include <cctype>

namespace plonka {

bool is_identifier(const std::string& s) {
    if (s.empty()) return false;
    auto head = [](char c) {
        return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
    };
    auto tail = [&](char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_' ||
               c == '\'';
    };
    if (!head(s[0])) return false;
    return std::all_of(s.begin() + 1, s.end(), tail);
}

Signature::Signature(std::map<std::string, int> ops) : ops_(std::move(ops)) {
    for (const auto& [name, arity] : ops_) {
        if (!is_identifier(name))
            throw input_error("invalid operation symbol '" + name + "'");
        if (arity < 0)
            throw input_error("negative arity for symbol '" + name + "'");
    }
}

int Signature::arity(const std::string& name) const {
    auto it = ops_.find(name);
    if (it == ops_.end())
        throw error("unknown operation symbol '" + name + "'");
    return it->second;
}

bool Signature::has_constants() const {
    for (const auto& [name, arity] : ops_)
        if (arity == 0) return true;
    return false;
}

bool Signature::has_proper_op() const {
    for (const auto& [name, arity] : ops_)
        if (arity >= 1) return true;
    return false;
}

Term Term::variable(std::string name) {
    return Term{std::move(name), true, {}};
}

Term Term::apply(std::string op, std::vector<Term> arguments) {
    return Term{std::move(op), false, std::move(arguments)};
}

int depth(const Term& t) {
    if (t.var) return 0;
    int d = 0;
    for (const Term& a : t.args) d = std::max(d, depth(a));
    return 1 + d;
}

namespace {

void collect_variables(const Term& t, std::set<std::string>& out) {
    if (t.var) {
        out.insert(t.head);
        return;
    }
    for (const Term& a : t.args) collect_variables(a, out);
}

}  // namespace

std::set<std::string> variables(const Term& t) {
    std::set<std::string> out;
    collect_variables(t, out);
    return out;
}

std::string to_string(const Term& t) {
    if (t.var || t.args.empty()) return t.head;
    std::string s = t.head + "(";
    for (std::size_t k = 0; k < t.args.size(); ++k) {
        if (k) s += ", ";
        s += to_string(t.args[k]);
    }
    return s + ")";
}

void check_term(const Term& t, const Signature& sig) {
    if (!is_identifier(t.head))
        throw error("'" + t.head + "' is not an identifier");
    if (t.var) {
        if (sig.has(t.head))
            throw error("variable '" + t.head +
                        "' collides with an operation symbol");
        if (!t.args.empty())
            throw error("variable '" + t.head + "' has arguments");
        return;
    }
    if (!sig.has(t.head)) throw error("unknown operation '" + t.head + "'");
    int a = sig.arity(t.head);
    if (a != static_cast<int>(t.args.size()))
        throw error("operation '" + t.head + "' expects " + std::to_string(a) +
                    " arguments, got " + std::to_string(t.args.size()));
    for (const Term& s : t.args) check_term(s, sig);
}

namespace {

int canonical_cmp(const Term& a, const Term& b) {
    int da = depth(a), db = depth(b);
    if (da != db) return da < db ? -1 : 1;
    if (a.head != b.head) return a.head < b.head ? -1 : 1;
    for (std::size_t k = 0; k < a.args.size() && k < b.args.size(); ++k) {
        int c = canonical_cmp(a.args[k], b.args[k]);
        if (c != 0) return c;
    }
    if (a.args.size() != b.args.size())
        return a.args.size() < b.args.size() ? -1 : 1;
    return 0;
}

class TermParser {
  public:
    TermParser(const std::string& text, const Signature& sig)
        : text_(text), sig_(sig) {}

    Term run() {
        skip_ws();
        if (pos_ >= text_.size()) throw parse_error("empty input", pos_);
        Term t = parse();
        skip_ws();
        if (pos_ < text_.size())
            throw parse_error("unexpected trailing input", pos_);
        return t;
    }

  private:
    void skip_ws() {
        while (pos_ < text_.size() &&
               std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    std::string ident() {
        std::size_t start = pos_;
        auto head = [](char c) {
            return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
        };
        auto tail = [](char c) {
            return std::isalnum(static_cast<unsigned char>(c)) || c == '_' ||
                   c == '\'';
        };
        if (pos_ >= text_.size() || !head(text_[pos_]))
            throw parse_error("expected identifier", pos_);
        ++pos_;
        while (pos_ < text_.size() && tail(text_[pos_])) ++pos_;
        return text_.substr(start, pos_ - start);
    }

    Term parse() {
        skip_ws();
        std::size_t at = pos_;
        std::string name = ident();
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == '(') {
            if (!sig_.has(name))
                throw parse_error("unknown operation '" + name + "'", at);
            ++pos_;
            std::vector<Term> args;
            args.push_back(parse());
            skip_ws();
            while (pos_ < text_.size() && text_[pos_] == ',') {
                ++pos_;
                args.push_back(parse());
                skip_ws();
            }
            if (pos_ >= text_.size() || text_[pos_] != ')')
                throw parse_error("expected ')'", pos_);
            ++pos_;
            int arity = sig_.arity(name);
            if (arity != static_cast<int>(args.size()))
                throw parse_error(
                    "operation '" + name + "' expects " +
                        std::to_string(arity) + " arguments, got " +
                        std::to_string(args.size()),
                    at);
            return Term::apply(name, std::move(args));
        }
        if (sig_.has(name)) {
            if (sig_.arity(name) != 0)
                throw parse_error("operation '" + name + "' expects " +
                                      std::to_string(sig_.arity(name)) +
                                      " arguments, got 0",
                                  at);
            return Term::apply(name);
        }
        return Term::variable(name);
    }

    const std::string& text_;
    const Signature& sig_;
    std::size_t pos_ = 0;
};

}  // namespace

bool canonical_less(const Term& a, const Term& b) {
    return canonical_cmp(a, b) < 0;
}

Term parse_term(const std::string& text, const Signature& sig) {
    return TermParser(text, sig).run();
}

Identity parse_identity(const std::string& text, const Signature& sig) {
    std::size_t eq = text.find('=');
    if (eq == std::string::npos)
        throw parse_error("expected '=' between the two terms", text.size());
    if (text.find('=', eq + 1) != std::string::npos)
        throw parse_error("more than one '='", text.find('=', eq + 1));
    return Identity{parse_term(text.substr(0, eq), sig),
                    parse_term(text.substr(eq + 1), sig)};
}

std::string to_string(const Identity& id) {
    return to_string(id.lhs) + " = " + to_string(id.rhs);
}

bool is_regular(const Identity& id) {
    return variables(id.lhs) == variables(id.rhs);
}

std::vector<Term> enumerate_terms_at(const Signature& sig,
                                     const std::vector<std::string>& vars,
                                     int d,
                                     const std::vector<Term>& shallower) {
    const std::vector<Term>& prefix = shallower;
    std::vector<Term> out;
    if (d == 0) {
        std::set<std::string> seen;
        for (const std::string& v : vars)
            if (seen.insert(v).second) out.push_back(Term::variable(v));
    } else {
        for (const auto& [op, arity] : sig.ops()) {
            if (arity == 0) {
                if (d == 1) out.push_back(Term::apply(op));
                continue;
            }
            if (prefix.empty()) continue;
            std::vector<std::size_t> pick(arity, 0);
            while (true) {
                int maxd = 0;
                for (int k = 0; k < arity; ++k)
                    maxd = std::max(maxd, depth(prefix[pick[k]]));
                if (maxd == d - 1) {
                    std::vector<Term> args;
                    args.reserve(arity);
                    for (int k = 0; k < arity; ++k)
                        args.push_back(prefix[pick[k]]);
                    out.push_back(Term::apply(op, std::move(args)));
                }
                int k = arity - 1;
                while (k >= 0 && ++pick[k] == prefix.size()) pick[k--] = 0;
                if (k < 0) break;
            }
        }
    }
    std::sort(out.begin(), out.end(), canonical_less);
    return out;
}

std::vector<Term> enumerate_terms(const Signature& sig,
                                  const std::vector<std::string>& vars,
                                  int max_depth) {
    if (max_depth < 0) throw error("max_depth must be >= 0");
    std::vector<Term> all;
    for (int d = 0; d <= max_depth; ++d) {
        std::vector<Term> layer = enumerate_terms_at(sig, vars, d, all);
        all.insert(all.end(), layer.begin(), layer.end());
    }
    return all;
}

}  // namespace plonka
