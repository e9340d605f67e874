#include "framecert/certificate.hpp"

#include "framecert/errors.hpp"

namespace framecert {

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Yes: return "YES";
    case Verdict::No: return "NO";
    case Verdict::Unknown: return "UNKNOWN";
  }
  return "UNKNOWN";
}

const char* method_name(Method m) {
  switch (m) {
    case Method::ComplementProperty: return "COMPLEMENT_PROPERTY";
    case Method::CountBound: return "COUNT_BOUND";
    case Method::SparkEnumeration: return "SPARK_ENUMERATION";
    case Method::IdentityInSpan: return "IDENTITY_IN_SPAN";
    case Method::SumProjectionsIdentity: return "SUM_PROJECTIONS_IDENTITY";
    case Method::Orthogonality: return "ORTHOGONALITY";
    case Method::SpanDeficit: return "SPAN_DEFICIT";
    case Method::IdentityCoefficientSum: return "IDENTITY_COEFFICIENT_SUM";
    case Method::ComplementNrEquivalence: return "COMPLEMENT_NR_EQUIVALENCE";
    case Method::NaimarkBounds: return "NAIMARK_BOUNDS";
    case Method::GramComplement: return "GRAM_COMPLEMENT";
    case Method::FrameBounds: return "FRAME_BOUNDS";
    case Method::SearchExhausted: return "SEARCH_EXHAUSTED";
    case Method::GradientSearch: return "GRADIENT_SEARCH";
    case Method::Undecided: return "UNDECIDED";
  }
  return "UNDECIDED";
}

Verdict verdict_from_name(const std::string& name) {
  if (name == "YES") return Verdict::Yes;
  if (name == "NO") return Verdict::No;
  if (name == "UNKNOWN") return Verdict::Unknown;
  fail(ErrorCode::ParseError, "unknown verdict '" + name + "'");
}

Method method_from_name(const std::string& name) {
  for (Method m : {Method::ComplementProperty, Method::CountBound, Method::SparkEnumeration,
                   Method::IdentityInSpan, Method::SumProjectionsIdentity, Method::Orthogonality,
                   Method::SpanDeficit, Method::IdentityCoefficientSum,
                   Method::ComplementNrEquivalence, Method::NaimarkBounds,
                   Method::GramComplement, Method::FrameBounds,
                   Method::SearchExhausted, Method::GradientSearch, Method::Undecided}) {
    if (name == method_name(m)) return m;
  }
  fail(ErrorCode::ParseError, "unknown method '" + name + "'");
}

}  // namespace framecert
