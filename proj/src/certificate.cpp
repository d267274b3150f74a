#include "perilink/certificate.hpp"

namespace perilink {

Verification verify_certificate(const Certificate& c) {
    if (!is_odd_prime(c.p)) return {false, 0, "InvalidPrime: " + std::to_string(c.p)};
    if (c.start.weight.rank() != c.end.weight.rank())
        return {false, c.steps.size(), "RankMismatch: start and end have different rank"};
    LinkageContext ctx{c.p, c.mode, -1, nullptr};
    ParityWeight current = c.start;
    for (std::size_t k = 0; k < c.steps.size(); ++k) {
        try {
            current = apply_move(current, c.steps[k], ctx);
        } catch (const std::exception& e) {
            return {false, k, e.what()};
        }
    }
    if (current != c.end)
        return {false, c.steps.size(), "EndMismatch: replay reaches " + current.to_string() + ", certificate claims " +
                                           c.end.to_string()};
    if (sector(c.start) != sector(c.end))
        return {false, c.steps.size(), "SectorMismatch"};
    return {};
}

std::vector<ParityWeight> replay(const Certificate& c) {
    LinkageContext ctx{c.p, c.mode, -1, nullptr};
    std::vector<ParityWeight> path{c.start};
    for (const Move& m : c.steps) path.push_back(apply_move(path.back(), m, ctx));
    return path;
}

Certificate reverse_certificate(const Certificate& c) {
    const auto path = replay(c);
    Certificate r{c.p, c.end, {}, c.start, c.mode};
    for (std::size_t k = c.steps.size(); k-- > 0;) r.steps.push_back(inverse_move(c.steps[k], path[k].weight));
    return r;
}

Certificate concatenate(const Certificate& c, const Certificate& d) {
    if (c.end != d.start) throw std::invalid_argument("concatenate: chains do not meet");
    if (c.p != d.p || c.mode != d.mode) throw std::invalid_argument("concatenate: parameters differ");
    Certificate out = c;
    out.steps.insert(out.steps.end(), d.steps.begin(), d.steps.end());
    out.end = d.end;
    return out;
}

}  // namespace perilink
