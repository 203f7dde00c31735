#include "sinv/rings.hpp"

#include <charconv>

namespace sinv {

namespace {

bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::int64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

} // namespace

PrimeField::PrimeField(std::int64_t p) : p_(p) {
    if (p > (std::int64_t{1} << 31))
        throw InputError("prime modulus too large: " + std::to_string(p));
    if (!is_prime(p))
        throw InputError("p must be prime: " + std::to_string(p));
}

PrimeField::Element PrimeField::inv(Element a) const {
    if (a == 0) throw DomainError("division by zero in " + name());
    // Extended Euclid on (a, p).
    std::int64_t old_r = a, r = p_;
    std::int64_t old_s = 1, s = 0;
    while (r != 0) {
        std::int64_t q = old_r / r;
        std::int64_t tmp = old_r - q * r;
        old_r = r;
        r = tmp;
        tmp = old_s - q * s;
        old_s = s;
        s = tmp;
    }
    return from_long(old_s);
}

Ring parse_ring(std::string_view text) {
    if (text == "z" || text == "Z") return IntegerRing{};
    if (text == "q" || text == "Q") return RationalField{};
    if (text.starts_with("zp:") || text.starts_with("Zp:")) {
        std::string_view num = text.substr(3);
        std::int64_t p = 0;
        auto [ptr, ec] = std::from_chars(num.data(), num.data() + num.size(), p);
        if (ec != std::errc{} || ptr != num.data() + num.size())
            throw InputError("bad prime in ring selector: " + std::string(text));
        return PrimeField(p);
    }
    throw InputError("unknown ring selector '" + std::string(text) +
                     "' (expected z, q, or zp:<prime>)");
}

std::string ring_name(const Ring& ring) {
    return std::visit([](const auto& r) { return r.name(); }, ring);
}

} // namespace sinv
