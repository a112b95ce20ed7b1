#ifndef LEADINF_LEADINF_H_
#define LEADINF_LEADINF_H_

#include "leadinf/card.h"
#include "leadinf/deal_view.h"
#include "leadinf/errors.h"
#include "leadinf/exact.h"
#include "leadinf/hand.h"
#include "leadinf/holding.h"
#include "leadinf/inference.h"
#include "leadinf/oracle.h"
#include "leadinf/prior.h"
#include "leadinf/probability.h"
#include "leadinf/random.h"
#include "leadinf/rules.h"

#endif  // LEADINF_LEADINF_H_
