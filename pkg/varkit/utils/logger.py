# -*- coding: utf-8 -*-
# file: logger.py
# time: 2026/10/17

import os
import sys
import time
import logging

today = time.strftime('%Y%m%d %H%M%S', time.localtime(time.time()))


def get_logger(log_path=None, log_name='varkit', log_type='run_log', level=logging.INFO):
    # stdout carries reports, so the console handler writes to stderr
    logger = logging.getLogger('varkit')
    if isinstance(level, str):
        level = logging.getLevelName(level.upper())
    if not logger.handlers:
        formatter = logging.Formatter('%(asctime)s %(levelname)s: %(message)s')

        console_handler = logging.StreamHandler(sys.stderr)
        console_handler.setFormatter(formatter)
        logger.addHandler(console_handler)

        if log_path:
            full_path = os.path.join(log_path, 'logs', log_name + '_' + today)
            if not os.path.exists(full_path):
                os.makedirs(full_path)
            file_handler = logging.FileHandler(os.path.join(full_path, '{}.log'.format(log_type)), encoding='utf8')
            file_handler.setFormatter(formatter)
            logger.addHandler(file_handler)

    for handler in logger.handlers:
        handler.setLevel(level)
    logger.setLevel(level)
    return logger


def release_logger(logger):
    while logger.handlers:
        handler = logger.handlers[0]
        logger.removeHandler(handler)
        handler.close()
