#include "lefschetz/families.hpp"

#include <cctype>
#include <stdexcept>

namespace lefschetz {

namespace {

void append_pure_powers(std::vector<Monomial>& gens, const std::vector<int>& alphas) {
    const int r = static_cast<int>(alphas.size());
    for (int i = 0; i < r; ++i) {
        gens.push_back(Monomial::variable(r, i, alphas[static_cast<std::size_t>(i)]));
    }
}

void append_squarefree(std::vector<Monomial>& gens, int r, int d) {
    // all binomial(r,d) squarefree degree-d monomials
    std::vector<int> pick(static_cast<std::size_t>(d));
    auto rec = [&](auto&& self, int start, int chosen) -> void {
        if (chosen == d) {
            std::vector<int> e(static_cast<std::size_t>(r), 0);
            for (int idx : pick) e[static_cast<std::size_t>(idx)] = 1;
            gens.push_back(Monomial(std::move(e)));
            return;
        }
        for (int i = start; i <= r - (d - chosen); ++i) {
            pick[static_cast<std::size_t>(chosen)] = i;
            self(self, i + 1, chosen + 1);
        }
    };
    rec(rec, 0, 0);
}

} // namespace

MonomialIdeal family_uniform(int r, int k, int d) {
    if (k < 2) throw std::invalid_argument("family_uniform needs k >= 2");
    if (d < 2 || d > r) throw std::invalid_argument("family_uniform needs 2 <= d <= r");
    std::vector<Monomial> gens;
    append_pure_powers(gens, std::vector<int>(static_cast<std::size_t>(r), k));
    append_squarefree(gens, r, d);
    return MonomialIdeal(RingContext(r), std::move(gens));
}

MonomialIdeal family_mixed(const std::vector<int>& alphas, int d) {
    const int r = static_cast<int>(alphas.size());
    if (r < 1) throw std::invalid_argument("family_mixed needs at least one exponent");
    for (int a : alphas) {
        if (a < 2 || a > 4) {
            throw std::invalid_argument("family_mixed needs every alpha_i in {2,3,4}");
        }
    }
    if (d < 4 || d > r) throw std::invalid_argument("family_mixed needs 4 <= d <= r");
    std::vector<Monomial> gens;
    append_pure_powers(gens, alphas);
    append_squarefree(gens, r, d);
    return MonomialIdeal(RingContext(r), std::move(gens));
}

MonomialIdeal family_squares(int r, int d) {
    if (d < 2 || d > r) throw std::invalid_argument("family_squares needs 2 <= d <= r");
    std::vector<Monomial> gens;
    append_pure_powers(gens, std::vector<int>(static_cast<std::size_t>(r), 2));
    append_squarefree(gens, r, d);
    return MonomialIdeal(RingContext(r), std::move(gens));
}

MonomialIdeal family_J(int r, int alpha) {
    if (r < 4) throw std::invalid_argument("family_J needs r >= 4");
    if (alpha < 5) throw std::invalid_argument("family_J needs alpha >= 5");
    std::vector<Monomial> gens;
    append_pure_powers(gens, std::vector<int>(static_cast<std::size_t>(r), alpha));
    for (int i = 0; i < r; ++i) {
        for (int m = i + 1; m < r; ++m) {
            std::vector<int> e(static_cast<std::size_t>(r), 0);
            e[static_cast<std::size_t>(i)] = alpha - 2;
            e[static_cast<std::size_t>(m)] = 2;
            gens.push_back(Monomial(e));
            e[static_cast<std::size_t>(i)] = 2;
            e[static_cast<std::size_t>(m)] = alpha - 2;
            gens.push_back(Monomial(std::move(e)));
        }
    }
    return MonomialIdeal(RingContext(r), std::move(gens));
}

void FamilySpec::validate() const {
    switch (tag) {
    case FamilyTag::UniformKD:
        if (r < 1 || k < 2 || d < 2 || d > r) {
            throw std::invalid_argument("uniform family needs r >= d >= 2 and k >= 2");
        }
        break;
    case FamilyTag::MixedAlphaD:
        if (alphas.empty()) throw std::invalid_argument("mixed family needs alphas");
        for (int a : alphas) {
            if (a < 2 || a > 4) throw std::invalid_argument("alphas must lie in 2..4");
        }
        if (d < 4 || d > static_cast<int>(alphas.size())) {
            throw std::invalid_argument("mixed family needs 4 <= d <= r");
        }
        break;
    case FamilyTag::SquaresD:
        if (r < 2 || d < 2 || d > r) {
            throw std::invalid_argument("squares family needs 2 <= d <= r");
        }
        break;
    case FamilyTag::JAlpha:
        if (r < 4 || alpha < 5) {
            throw std::invalid_argument("J family needs r >= 4 and alpha >= 5");
        }
        break;
    case FamilyTag::Custom:
        if (custom_generators.empty()) {
            throw std::invalid_argument("custom ideal needs generators");
        }
        break;
    }
}

MonomialIdeal FamilySpec::build() const {
    validate();
    switch (tag) {
    case FamilyTag::UniformKD: return family_uniform(r, k, d);
    case FamilyTag::MixedAlphaD: return family_mixed(alphas, d);
    case FamilyTag::SquaresD: return family_squares(r, d);
    case FamilyTag::JAlpha: return family_J(r, alpha);
    case FamilyTag::Custom: return MonomialIdeal(RingContext(r), custom_generators);
    }
    throw std::logic_error("unreachable");
}

std::string FamilySpec::family_name() const {
    switch (tag) {
    case FamilyTag::UniformKD: return "uniform";
    case FamilyTag::MixedAlphaD: return "mixed";
    case FamilyTag::SquaresD: return "squares";
    case FamilyTag::JAlpha: return "j";
    case FamilyTag::Custom: return "custom";
    }
    return "?";
}

ParseError::ParseError(std::string message, std::size_t position)
    : std::runtime_error(message + " (at position " + std::to_string(position) + ")"),
      position_(position) {}

NotArtinianError::NotArtinianError(std::string message, int variable)
    : std::runtime_error(std::move(message)), variable_(variable) {}

namespace {

// Tokenizing cursor over the ideal grammar; whitespace insignificant.
class Cursor {
public:
    explicit Cursor(const std::string& text) : s_(text) {}

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool done() {
        skip_ws();
        return pos_ >= s_.size();
    }
    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }
    bool accept(char c) {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    std::size_t pos() {
        skip_ws();
        return pos_;
    }
    long integer() {
        skip_ws();
        if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            throw ParseError("expected an integer", pos_);
        }
        long v = 0;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            v = v * 10 + (s_[pos_] - '0');
            if (v > 1000000) throw ParseError("integer too large", pos_);
            ++pos_;
        }
        return v;
    }

private:
    const std::string& s_;
    std::size_t pos_ = 0;
};

// factor := 'x' INDEX ('^' EXP)?
void parse_factor(Cursor& cur, int r, std::vector<int>& exps) {
    const std::size_t at = cur.pos();
    if (!cur.accept('x')) throw ParseError("expected 'x'", at);
    const std::size_t idx_at = cur.pos();
    const long index = cur.integer();
    if (index < 1 || index > r) {
        throw ParseError("variable index out of range 1.." + std::to_string(r), idx_at);
    }
    long exp = 1;
    if (cur.accept('^')) {
        const std::size_t exp_at = cur.pos();
        exp = cur.integer();
        if (exp < 1) throw ParseError("exponent must be >= 1", exp_at);
    }
    exps[static_cast<std::size_t>(index - 1)] += static_cast<int>(exp);
}

} // namespace

MonomialIdeal parse_ideal(const std::string& text, int r) {
    if (r < 1) throw std::invalid_argument("need r >= 1");
    Cursor cur(text);
    std::vector<Monomial> gens;
    if (cur.done()) throw ParseError("empty ideal text", 0);
    while (true) {
        std::vector<int> exps(static_cast<std::size_t>(r), 0);
        parse_factor(cur, r, exps);
        while (cur.accept('*')) parse_factor(cur, r, exps);
        gens.push_back(Monomial(std::move(exps)));
        if (cur.done()) break;
        const std::size_t at = cur.pos();
        if (!cur.accept(',')) throw ParseError("expected ',' or '*'", at);
        if (cur.done()) throw ParseError("trailing comma", at);
    }
    MonomialIdeal I(RingContext(r), std::move(gens));
    if (auto missing = I.missing_pure_power()) {
        throw NotArtinianError("ideal is not Artinian: no pure power of x" +
                                   std::to_string(*missing + 1),
                               *missing);
    }
    return I;
}

std::string render_ideal(const MonomialIdeal& I) {
    std::string out;
    for (const auto& g : I.generators()) {
        if (!out.empty()) out += ", ";
        out += g.str();
    }
    return out;
}

} // namespace lefschetz
