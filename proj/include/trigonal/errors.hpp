#ifndef TRIGONAL_ERRORS_HPP
#define TRIGONAL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace trig {

// Base for all domain errors.  `name()` is the stable machine-readable
// identifier used by the CLI error objects.
class Error : public std::runtime_error {
public:
    Error(std::string name, const std::string& detail)
        : std::runtime_error(detail), name_(std::move(name)) {}
    const std::string& name() const { return name_; }

private:
    std::string name_;
};

#define TRIG_DEFINE_ERROR(Name)                                        \
    class Name : public Error {                                        \
    public:                                                            \
        explicit Name(const std::string& detail = "")                  \
            : Error(#Name, detail) {}                                  \
    }

TRIG_DEFINE_ERROR(DegenerateCover);
TRIG_DEFINE_ERROR(PrecisionExhausted);
TRIG_DEFINE_ERROR(InvalidValuations);
TRIG_DEFINE_ERROR(NotIntegral);
TRIG_DEFINE_ERROR(NonGenericInput);
TRIG_DEFINE_ERROR(DimensionMismatch);
TRIG_DEFINE_ERROR(UnsupportedRamType);
TRIG_DEFINE_ERROR(NotSplitNormalization);
TRIG_DEFINE_ERROR(BalancedCover);
TRIG_DEFINE_ERROR(BalancedCrimp);
TRIG_DEFINE_ERROR(NonSplitFiber);
TRIG_DEFINE_ERROR(NotBalanced);
TRIG_DEFINE_ERROR(BasisDegenerate);
TRIG_DEFINE_ERROR(MalformedInput);

#undef TRIG_DEFINE_ERROR

} // namespace trig

#endif
