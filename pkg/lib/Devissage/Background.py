# Worker threads serving the master's background task queue. Tasks are
# independent per prime, results are collected by key and handed back in
# submission order so output never depends on the thread count.

import os
import threading
import traceback

from termcolor import colored

from lib.Devissage.Frobenius.Classify import classify_frobenius, crosscheck_table


def _classify(master, task):
    return classify_frobenius(task["p"], master.getF28(), master.getClasses())


def _crosscheck(master, task):
    return crosscheck_table(task["row"], master.getF28(), master.getClasses())


TASKS = {
    "classify": _classify,
    "crosscheck": _crosscheck,
}


def background_tasks_thread(master):
    while True:
        task = master.getBackgroundTask()
        try:
            result = TASKS[task["cmd"]](master, task)
        except Exception as e:
            # Failures travel back to the caller as the exception itself
            master.debugLog(
                2,
                "Background",
                colored("BackgroundError", "red")
                + ": "
                + traceback.format_exc()
                + ", occurred when processing background task",
            )
            result = e
        master.storeBackgroundResult(task, result)

        # Delete task['cmd'] from backgroundTasksCmds so it can be queued again
        master.deleteBackgroundTask(task)
        master.doneBackgroundTask()


def thread_count(master, requested=None):
    n = requested if requested is not None else master.getConfig("threads", 0)
    if not n or n < 1:
        n = os.cpu_count() or 1
    return n


def start_workers(master, count):
    started = getattr(master, "workerThreads", [])
    for _ in range(len(started), count):
        worker = threading.Thread(target=background_tasks_thread, args=(master,), daemon=True)
        worker.start()
        started.append(worker)
    master.workerThreads = started
    master.debugLog(10, "Background", "%d worker threads running" % len(started))


def run_tasks(master, cmd, tasks, threads=None):
    # tasks: list of dicts without 'cmd'; returns results in the same order
    if not tasks:
        return []
    start_workers(master, thread_count(master, threads))
    for key, task in enumerate(tasks):
        master.queue_background_task(dict(task, cmd=cmd, key=key))
    master.backgroundTasksQueue.join()
    results = master.takeBackgroundResults(cmd)
    return [results.get(key) for key in range(len(tasks))]
