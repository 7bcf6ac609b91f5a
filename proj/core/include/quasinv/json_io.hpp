#pragma once

#include "quasinv/cyclotomic.hpp"
#include "quasinv/demazure.hpp"
#include "quasinv/elliptic.hpp"
#include "quasinv/fake_k.hpp"
#include "quasinv/ganea.hpp"
#include "quasinv/groups.hpp"
#include "quasinv/hilbert.hpp"
#include "quasinv/laurent.hpp"
#include "quasinv/polynomial.hpp"
#include "quasinv/quasi_invariants.hpp"
#include "quasinv/rational.hpp"
#include "quasinv/zq_series.hpp"

#include <json.hpp>

#include <type_traits>

namespace quasinv {

// Insertion-ordered so that dumps are byte-stable.
using Json = nlohmann::ordered_json;

// Rational as "num/den" (den omitted when 1).
Json to_json(const Rational& r);
Rational rational_from_json(const Json& j);
Json to_json(const Integer& n);

// Cyclotomic as {"zeta_order": n, "coords": [...]}.
Json to_json(const Cyclotomic& c);
Cyclotomic cyclotomic_from_json(const Json& j);

// Polynomial as {"vars": [...], "terms": [{"exp": [...], "coeff": ...}]} in grlex order.
Json to_json(const Polynomial& p);
Polynomial polynomial_from_json(const Json& j);

// Laurent element as {"terms": [{"z_exp": "1/2", "coeff": ...}]}.
Json to_json(const LaurentElement& f);
// Series as [z_exp, q_exp, coeff] triples with the window and q-order.
Json to_json(const ZQSeries& s);
Json to_json(const QSeries& s);
Json to_json(const IntSeries& s);

Json to_json(Verdict v);
Json to_json(const HilbertSeries& h);
Json to_json(const Multiplicity& m);
Json to_json(const ReflectionGroup& g);
Json to_json(const Matrix<Cyclotomic>& m);
Json layers_json(const std::vector<std::vector<Polynomial>>& layers);
Json to_json(const GradedBasis& b);
Json to_json(const FreenessCertificate& c);
Json to_json(const GorensteinResult& r);
Json to_json(const FiltrationResult& r);
Json to_json(const CWElement& e);
Json to_json(const CWValuedBasis& b);

Json to_json(const ExpBasis& b);
Json to_json(const ExpMembership& m);
Json to_json(const TruncatedExpSeries& s);
Json to_json(const ChernResult& r);

Json to_json(const NBResult& r);
Json to_json(const DistinguishingInvariant& d);

Json to_json(const ThetaElement& t);
Json to_json(const FunctionalEquationCertificate& c);
Json to_json(const SectionSpace& s);
Json to_json(const ThetaDivisibility& d);
Json to_json(const GradedDimension& g);
Json to_json(const SheafDims& d);
Json to_json(const GGenerator& g);

Json to_json(const GaneaStep& s);
Json to_json(const TowerResult& t);
Json to_json(const HtInvariants& h);
Json to_json(const X1Result& x);
Json to_json(const FakeCohomology& f);

template <class T>
Json dims_json(const std::vector<T>& dims)
{
    Json a = Json::array();
    for (const auto& d : dims) {
        if constexpr (std::is_same_v<T, Integer>)
            a.push_back(to_json(d));
        else
            a.push_back(d);
    }
    return a;
}

} // namespace quasinv
