#include "actkit/biact.hpp"

#include "actkit/errors.hpp"

namespace actkit {

Biact Biact::validate(MonoidPtr left_monoid, Grid left_action, RightAct right) {
    if (!left_monoid) throw Error("biact needs a left monoid");
    const Index e_size = left_monoid->size();
    const Index sz = right.size();
    if (static_cast<Index>(left_action.size()) != e_size)
        throw BiactAxiomViolation("left action needs one row per left monoid element");
    for (Index e = 0; e < e_size; ++e) {
        if (static_cast<Index>(left_action[e].size()) != sz)
            throw BiactAxiomViolation("left action row " + std::to_string(e) +
                                      " has wrong length");
        for (Index a = 0; a < sz; ++a)
            if (left_action[e][a] < 0 || left_action[e][a] >= sz)
                throw BiactAxiomViolation("left action entry out of range");
    }
    for (Index a = 0; a < sz; ++a)
        if (left_action[left_monoid->identity()][a] != a)
            throw BiactAxiomViolation("left identity does not fix element " + std::to_string(a));
    for (Index e = 0; e < e_size; ++e)
        for (Index f = 0; f < e_size; ++f)
            for (Index a = 0; a < sz; ++a)
                if (left_action[e][left_action[f][a]] !=
                    left_action[left_monoid->mul(e, f)][a])
                    throw BiactAxiomViolation("left action law fails at (" + std::to_string(e) +
                                              ", " + std::to_string(f) + ", " +
                                              std::to_string(a) + ")");
    const Index m_size = right.monoid()->size();
    for (Index e = 0; e < e_size; ++e)
        for (Index a = 0; a < sz; ++a)
            for (Index m = 0; m < m_size; ++m)
                if (right.act(left_action[e][a], m) != left_action[e][right.act(a, m)])
                    throw BiactAxiomViolation("actions do not commute at (" + std::to_string(e) +
                                              ", " + std::to_string(a) + ", " +
                                              std::to_string(m) + ")");
    return Biact(std::move(left_monoid), std::move(left_action), std::move(right));
}

}  // namespace actkit
