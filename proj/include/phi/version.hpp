#pragma once

#define PHI_VERSION "0.1.0"
