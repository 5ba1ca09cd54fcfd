#ifndef CYC_ERROR_HPP
#define CYC_ERROR_HPP

#include <stdexcept>
#include <string>

namespace cyc {

enum class Errc {
    NonPrimeCharacteristic,
    SizeExceeded,
    NotCoprime,
    ZeroElement,
    OrderUnavailable,
    DivisionByZeroPoly,
    FieldMismatch,
    ZeroPolyDegree,
    NotADivisor,
    NotMonic,
    LengthMismatch,
    TooLarge,
    NotOddPrime,
    QNotResidue,
    NotInLambda,
    AssumptionViolated,
    NoGammaExists,
    NonCoprimeParams,
    RootClassViolation,
    BudgetExceeded,
    Usage,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
   public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
    Errc code() const noexcept { return code_; }

   private:
    Errc code_;
};

}  // namespace cyc

#endif
