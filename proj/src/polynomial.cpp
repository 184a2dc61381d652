#include "repunit/polynomial.hpp"

#include <cctype>
#include <sstream>

namespace repunit {

namespace {

void require_same_nvars(int a, int b, const char* what) {
    if (a != b)
        throw ParamError(std::string(what) + ": variable counts differ (" + std::to_string(a) +
                         " vs " + std::to_string(b) + ")");
}

std::int64_t checked_exp_add(std::int64_t a, std::int64_t b) {
    std::int64_t r = 0;
    if (__builtin_add_overflow(a, b, &r))
        throw ParamError("monomial exponent overflow");
    return r;
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) { return a * b % p; }

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
    std::uint64_t r = 1 % p;
    base %= p;
    while (exp) {
        if (exp & 1)
            r = mulmod(r, base, p);
        base = mulmod(base, base, p);
        exp >>= 1;
    }
    return r;
}

std::uint64_t coeff_mod(const Int& c, std::uint64_t p) {
    Int r = c % Int(p);
    if (r < 0)
        r += Int(p);
    return r.convert_to<std::uint64_t>();
}

}  // namespace

bool Monomial::is_constant() const {
    for (auto e : exps)
        if (e != 0)
            return false;
    return true;
}

Int Monomial::total_degree() const {
    Int d = 0;
    for (auto e : exps)
        d += e;
    return d;
}

bool TermOrder::operator()(const Monomial& x, const Monomial& y) const {
    const Int dx = x.total_degree(), dy = y.total_degree();
    if (dx != dy)
        return dx > dy;
    return x.exps > y.exps;
}

SparsePolynomial SparsePolynomial::constant(int nvars, Int value) {
    SparsePolynomial p(nvars);
    p.add_term(Monomial{std::vector<std::int64_t>(static_cast<std::size_t>(nvars), 0)}, value);
    return p;
}

SparsePolynomial SparsePolynomial::variable(int nvars, int i, std::int64_t exp) {
    if (i < 1 || i > nvars)
        throw ParamError("variable index " + std::to_string(i) + " out of range [1, " +
                         std::to_string(nvars) + "]");
    if (exp < 0)
        throw ParamError("negative exponent " + std::to_string(exp));
    SparsePolynomial p(nvars);
    Monomial m{std::vector<std::int64_t>(static_cast<std::size_t>(nvars), 0)};
    m.exps[static_cast<std::size_t>(i - 1)] = exp;
    p.add_term(m, 1);
    return p;
}

SparsePolynomial SparsePolynomial::from_monomial(Monomial m, Int coeff) {
    SparsePolynomial p(static_cast<int>(m.exps.size()));
    p.add_term(m, coeff);
    return p;
}

Int SparsePolynomial::constant_term() const {
    Monomial one{std::vector<std::int64_t>(static_cast<std::size_t>(nvars_), 0)};
    auto it = terms_.find(one);
    return it == terms_.end() ? Int(0) : it->second;
}

void SparsePolynomial::add_term(const Monomial& m, const Int& coeff) {
    if (coeff == 0)
        return;
    auto [it, inserted] = terms_.emplace(m, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0)
            terms_.erase(it);
    }
}

SparsePolynomial SparsePolynomial::operator-() const {
    SparsePolynomial r(nvars_);
    for (const auto& [m, c] : terms_)
        r.terms_.emplace(m, -c);
    return r;
}

SparsePolynomial SparsePolynomial::operator+(const SparsePolynomial& rhs) const {
    require_same_nvars(nvars_, rhs.nvars_, "polynomial addition");
    SparsePolynomial r = *this;
    for (const auto& [m, c] : rhs.terms_)
        r.add_term(m, c);
    return r;
}

SparsePolynomial SparsePolynomial::operator-(const SparsePolynomial& rhs) const {
    require_same_nvars(nvars_, rhs.nvars_, "polynomial subtraction");
    SparsePolynomial r = *this;
    for (const auto& [m, c] : rhs.terms_)
        r.add_term(m, -c);
    return r;
}

SparsePolynomial SparsePolynomial::operator*(const SparsePolynomial& rhs) const {
    require_same_nvars(nvars_, rhs.nvars_, "polynomial multiplication");
    SparsePolynomial r(nvars_);
    for (const auto& [ma, ca] : terms_) {
        for (const auto& [mb, cb] : rhs.terms_) {
            Monomial m{std::vector<std::int64_t>(ma.exps.size())};
            for (std::size_t i = 0; i < ma.exps.size(); ++i)
                m.exps[i] = checked_exp_add(ma.exps[i], mb.exps[i]);
            r.add_term(m, ca * cb);
        }
    }
    return r;
}

Int monomial_sdegree(const Monomial& m, const RepunitSemigroup& s) {
    if (static_cast<int>(m.exps.size()) != s.nvars())
        throw ParamError("monomial has " + std::to_string(m.exps.size()) +
                         " variables, semigroup has " + std::to_string(s.nvars()));
    Int d = 0;
    for (std::size_t i = 0; i < m.exps.size(); ++i)
        d += Int(m.exps[i]) * s.generators()[i];
    return d;
}

bool is_homogeneous(const SparsePolynomial& p, const RepunitSemigroup& s) {
    if (p.is_zero())
        return true;
    const Int d = monomial_sdegree(p.terms().begin()->first, s);
    for (const auto& [m, c] : p.terms())
        if (monomial_sdegree(m, s) != d)
            return false;
    return true;
}

Int sdegree(const SparsePolynomial& p, const RepunitSemigroup& s) {
    if (p.is_zero())
        throw ParamError("the zero polynomial has no S-degree");
    const Int d = monomial_sdegree(p.terms().begin()->first, s);
    for (const auto& [m, c] : p.terms()) {
        const Int e = monomial_sdegree(m, s);
        if (e != d)
            throw ParamError("polynomial is not S-homogeneous: degrees " + d.str() + " and " +
                             e.str() + " both occur");
    }
    return d;
}

bool is_field_prime(std::uint64_t p) {
    if (p < 2 || p >= (1ull << 31))
        return false;
    for (std::uint64_t d = 2; d * d <= p; ++d)
        if (p % d == 0)
            return false;
    return true;
}

std::uint64_t evaluate(const SparsePolynomial& p, const std::vector<std::uint64_t>& point,
                       std::uint64_t prime) {
    if (!is_field_prime(prime))
        throw ParamError("modulus " + std::to_string(prime) + " is not a prime below 2^31");
    if (static_cast<int>(point.size()) != p.nvars())
        throw ParamError("evaluation point has " + std::to_string(point.size()) +
                         " coordinates, polynomial has " + std::to_string(p.nvars()) +
                         " variables");
    std::uint64_t acc = 0;
    for (const auto& [m, c] : p.terms()) {
        std::uint64_t term = coeff_mod(c, prime);
        for (std::size_t i = 0; i < m.exps.size() && term; ++i)
            if (m.exps[i] != 0)
                term = mulmod(term,
                              powmod(point[i] % prime, static_cast<std::uint64_t>(m.exps[i]),
                                     prime),
                              prime);
        acc = (acc + term) % prime;
    }
    return acc;
}

std::string default_variable_name(int index) { return "x" + std::to_string(index + 1); }

std::string to_string(const SparsePolynomial& p, const VariableNamer& namer) {
    if (p.is_zero())
        return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [m, c] : p.terms()) {
        const bool negative = c < 0;
        if (first)
            out << (negative ? "-" : "");
        else
            out << (negative ? "-" : "+");
        first = false;
        const Int mag = abs(c);
        bool printed = false;
        if (mag != 1 || m.is_constant()) {
            out << mag.str();
            printed = true;
        }
        for (std::size_t i = 0; i < m.exps.size(); ++i) {
            if (m.exps[i] == 0)
                continue;
            if (printed)
                out << '*';
            out << namer(static_cast<int>(i));
            if (m.exps[i] != 1)
                out << '^' << m.exps[i];
            printed = true;
        }
    }
    return out.str();
}

namespace {

struct Parser {
    const std::string& text;
    std::size_t pos = 0;
    int nvars;

    void skip_space() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
            ++pos;
    }

    bool peek(char c) {
        skip_space();
        return pos < text.size() && text[pos] == c;
    }

    bool consume(char c) {
        if (!peek(c))
            return false;
        ++pos;
        return true;
    }

    [[noreturn]] void fail(const std::string& what) {
        throw ParamError("polynomial parse error at position " + std::to_string(pos) + ": " +
                         what);
    }

    std::string read_digits() {
        skip_space();
        std::string digits;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
            digits.push_back(text[pos++]);
        if (digits.empty())
            fail("expected an integer");
        return digits;
    }

    // [integer] [* x<i>[^e] [* x<i>[^e] ...]]  or a bare monomial
    std::pair<Monomial, Int> read_term() {
        Int coeff = 1;
        Monomial m{std::vector<std::int64_t>(static_cast<std::size_t>(nvars), 0)};
        bool saw_factor = false;
        skip_space();
        if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            coeff = Int(read_digits());
            saw_factor = true;
            if (!consume('*'))
                return {m, coeff};  // constant term
        }
        while (true) {
            skip_space();
            if (pos >= text.size() || text[pos] != 'x')
                fail("expected a variable factor");
            ++pos;
            const int index = static_cast<int>(std::stoll(read_digits()));
            if (index < 1 || index > nvars)
                fail("variable x" + std::to_string(index) + " out of range");
            std::int64_t exp = 1;
            if (consume('^'))
                exp = std::stoll(read_digits());
            m.exps[static_cast<std::size_t>(index - 1)] =
                checked_exp_add(m.exps[static_cast<std::size_t>(index - 1)], exp);
            saw_factor = true;
            if (!consume('*'))
                break;
        }
        if (!saw_factor)
            fail("empty term");
        return {m, coeff};
    }
};

}  // namespace

SparsePolynomial parse_polynomial(const std::string& text, int nvars) {
    if (nvars < 1)
        throw ParamError("polynomial parsing needs at least one variable");
    Parser parser{text, 0, nvars};
    parser.skip_space();
    if (parser.pos >= text.size())
        parser.fail("empty input");
    SparsePolynomial result(nvars);
    bool negate = parser.consume('-');
    if (!negate)
        parser.consume('+');
    while (true) {
        auto [m, c] = parser.read_term();
        result = result + SparsePolynomial::from_monomial(m, negate ? -c : c);
        parser.skip_space();
        if (parser.pos >= text.size())
            break;
        if (parser.consume('-'))
            negate = true;
        else if (parser.consume('+'))
            negate = false;
        else
            parser.fail("expected '+' or '-'");
    }
    return result;
}

PolyMatrix PolyMatrix::identity(std::size_t n, int nvars) {
    PolyMatrix m(n, n, nvars);
    for (std::size_t i = 0; i < n; ++i)
        m.set(i, i, SparsePolynomial::constant(nvars, 1));
    return m;
}

void PolyMatrix::set(std::size_t r, std::size_t c, SparsePolynomial p) {
    if (r >= rows_ || c >= cols_)
        throw ParamError("matrix index (" + std::to_string(r) + ", " + std::to_string(c) +
                         ") out of range for " + std::to_string(rows_) + "x" +
                         std::to_string(cols_));
    if (p.is_zero())
        entries_.erase({r, c});
    else {
        require_same_nvars(nvars_, p.nvars(), "matrix entry");
        entries_.insert_or_assign({r, c}, std::move(p));
    }
}

const SparsePolynomial* PolyMatrix::find(std::size_t r, std::size_t c) const {
    auto it = entries_.find({r, c});
    return it == entries_.end() ? nullptr : &it->second;
}

SparsePolynomial PolyMatrix::at(std::size_t r, std::size_t c) const {
    const SparsePolynomial* p = find(r, c);
    return p ? *p : SparsePolynomial(nvars_);
}

PolyMatrix matmul(const PolyMatrix& a, const PolyMatrix& b) {
    if (a.cols() != b.rows())
        throw ParamError("matrix shape mismatch: " + std::to_string(a.rows()) + "x" +
                         std::to_string(a.cols()) + " times " + std::to_string(b.rows()) + "x" +
                         std::to_string(b.cols()));
    require_same_nvars(a.nvars(), b.nvars(), "matrix multiplication");
    std::map<PolyMatrix::Key, SparsePolynomial> acc;
    for (const auto& [ka, pa] : a.entries()) {
        const auto mid = ka.second;
        auto it = b.entries().lower_bound({mid, 0});
        const auto end = b.entries().lower_bound({mid + 1, 0});
        for (; it != end; ++it) {
            const auto col = it->first.second;
            auto [slot, inserted] = acc.emplace(PolyMatrix::Key{ka.first, col}, pa * it->second);
            if (!inserted)
                slot->second = slot->second + pa * it->second;
        }
    }
    PolyMatrix result(a.rows(), b.cols(), a.nvars());
    for (auto& [key, p] : acc)
        result.set(key.first, key.second, std::move(p));
    return result;
}

std::vector<std::vector<std::uint64_t>> evaluate(const PolyMatrix& m,
                                                 const std::vector<std::uint64_t>& point,
                                                 std::uint64_t prime) {
    std::vector<std::vector<std::uint64_t>> dense(m.rows(),
                                                  std::vector<std::uint64_t>(m.cols(), 0));
    for (const auto& [key, p] : m.entries())
        dense[key.first][key.second] = evaluate(p, point, prime);
    return dense;
}

}  // namespace repunit
