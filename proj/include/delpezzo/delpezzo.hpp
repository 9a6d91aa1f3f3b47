#pragma once

#include "delpezzo/rational.hpp"
#include "delpezzo/surface_model.hpp"
#include "delpezzo/intersection.hpp"
#include "delpezzo/serialize.hpp"
#include "delpezzo/classifier.hpp"
#include "delpezzo/gallery.hpp"
#include "delpezzo/expression.hpp"
#include "delpezzo/render.hpp"
