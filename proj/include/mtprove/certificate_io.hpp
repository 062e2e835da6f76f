#pragma once

// JSON certificate documents (schema "mtp-certificate/1").
// Rationals are "n/d" strings, Q[pi] elements are arrays of rationals by
// ascending power of pi, polynomials are arrays of Q[pi] elements by
// ascending power of the variable. Every expression carries its canonical
// text, which must match the structured terms on load.

#include "mtprove/prover.hpp"

#include <string>

namespace mtprove {

// Well-formed JSON that does not describe a valid certificate.
class FormatError : public Error {
public:
    using Error::Error;
};

std::string to_json(const Certificate& c);
// Throws ParseError on malformed JSON and FormatError on schema violations.
Certificate certificate_from_json(const std::string& text);

struct CheckOutcome {
    enum Kind { Accepted, Rejected, InputError } kind;
    std::string message;
};
// Parse and verify a certificate document.
CheckOutcome check_document(const std::string& text, const Precision& prec = {});

} // namespace mtprove
