from .errors import *
from .campaign import Status, CampaignAPI, CampaignResults, Campaign, make_record, REPORT_SCHEMA
