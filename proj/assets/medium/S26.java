class S26 extends Abstract1 {
  public void enter() {
    switch (event) {
      case EV432:
        switch (event) {
          case EV433:
            try {
              new S28();
              send("msg13");
            } catch (IllegalStateException e) {
              send("msg8");
              send("msg0");
            } finally {
              send("msg14");
              new S30();
            }
            break;
        }
        send("msg11");
        switch (event) {
          case EV434:
            switch (event) {
              case EV435:
                send("msg16");
                send("msg16");
                send("msg17");
                log("note");
                break;
              case EV436:
                new S3();
                break;
            }
            new S13();
            new S7();
            switch (event) {
              case EV437:
                new S2();
                new S29();
                break;
              case EV438:
                new State();
                new State();
                send("msg16");
                break;
              case EV439:
                new S5();
                break;
            }
            break;
          case EV440:
            new S15();
            if (x7 > 0) {
              new S30();
              new S30();
              send("msg11");
            } else {
              new S26();
              new S13();
              send("msg1");
            }
            break;
          case EV441:
            switch (event) {
              case EV442:
                send("msg9");
                break;
            }
            if (x4 > 0) {
              new Helper();
              new S18();
              new S21();
              new S11();
            } else {
              send("msg16");
              send("msg4");
            }
            new S27();
            new S29();
            break;
        }
        send("msg14");
        break;
      case EV443:
        new S11();
        new S16();
        if (x5 > 0) {
          switch (event) {
            case EV444:
              new S6();
              break;
          }
          log("note");
          new S4();
          new S7();
        } else {
          switch (event) {
            case EV445:
              send("msg9");
              new S25();
              break;
            case EV446:
              send("msg4");
              send("msg0");
              send("msg14");
              break;
            case EV447:
              new S11();
              log("note");
              send("msg7");
              break;
          }
          switch (event) {
            case EV448:
              send("msg5");
              new S3();
              new S24();
              break;
            case EV449:
              send("msg0");
              new S22();
              send("msg10");
              break;
          }
        }
        break;
      case EV450:
        new S10();
        send("msg12");
        break;
    }
    if (x0 > 0) {
      if (x3 > 0) {
        send("msg4");
        try {
          new S26();
          new S7();
          new S27();
        } finally {
          new S4();
          new S17();
        }
      }
      send("msg12");
      if (x4 > 0) {
        switch (event) {
          case EV451:
            new S6();
            log("note");
            new S12();
            break;
        }
      } else {
        new S7();
        send("msg13");
        new S15();
      }
    } else {
      send("msg0");
      send("msg19");
    }
    try {
      new S5();
    } catch (IllegalStateException e) {
      send("msg19");
      if (x6 > 0) {
        new S28();
        new S6();
        send("msg13");
        switch (event) {
          case EV452:
            new S19();
            log("note");
            new S14();
            break;
          case EV453:
            new S22();
            log("note");
            send("msg13");
            send("msg8");
            break;
        }
      }
    } catch (IllegalStateException e) {
      if (x7 > 0) {
        send("msg17");
        new S9();
        if (x7 > 0) {
          log("note");
          send("msg10");
        }
        send("msg1");
      }
      new S8();
    }
    new S21();
  }
  void exit() {
    new S4();
  }
  void handle() {
    if (x2 > 0) {
      send("msg3");
      new S8();
      new S30();
      if (x3 > 0) {
        if (x6 > 0) {
          log("note");
          log("note");
        }
        log("note");
        if (x6 > 0) {
          new S1();
          new S24();
          send("msg0");
          log("note");
        } else {
          new S13();
          send("msg4");
        }
        log("note");
      }
    } else {
      try {
        send("msg13");
        switch (event) {
          case EV454:
            send("msg11");
            new S28();
            break;
        }
        send("msg9");
        log("note");
      } catch (IllegalStateException e) {
        new S12();
        new S10();
        switch (event) {
          case EV455:
            new S23();
            send("msg9");
            log("note");
            new S25();
            break;
          case EV456:
            log("note");
            new S14();
            break;
          case EV457:
            new S3();
            send("msg16");
            break;
        }
      } finally {
        send("msg14");
        new S17();
        try {
          send("msg8");
          send("msg6");
          new State();
          new S21();
        } catch (IllegalStateException e) {
          log("note");
          new S24();
        }
      }
      switch (event) {
        case EV458:
          try {
            send("msg14");
            send("msg3");
            send("msg16");
          } finally {
            send("msg9");
          }
          if (x1 > 0) {
            new S10();
            send("msg4");
          } else {
            send("msg11");
            new S24();
            new S20();
          }
          break;
        case EV459:
          send("msg0");
          break;
        case EV460:
          send("msg15");
          try {
            send("msg18");
            send("msg19");
            send("msg1");
            send("msg4");
          } finally {
            new Helper();
            send("msg8");
          }
          send("msg9");
          break;
      }
    }
    new S15();
    log("note");
  }
  void tick() {
    new S28();
    if (x8 > 0) {
      new S10();
      new Helper();
      switch (event) {
        case EV461:
          new S13();
          break;
      }
    } else {
      send("msg5");
      try {
        send("msg8");
        send("msg14");
        new S21();
      } catch (IOException e) {
        send("msg12");
      }
      switch (event) {
        case EV462:
          switch (event) {
            case EV463:
              send("msg12");
              log("note");
              break;
            case EV464:
              new S13();
              send("msg12");
              new S6();
              new S14();
              break;
          }
          send("msg0");
          break;
      }
      if (x1 > 0) {
        send("msg12");
        new S28();
        send("msg6");
      } else {
        switch (event) {
          case EV465:
            new S24();
            new S12();
            break;
          case EV466:
            new S1();
            log("note");
            new S4();
            new S1();
            break;
          case EV467:
            new S10();
            break;
        }
        switch (event) {
          case EV468:
            new S28();
            new Helper();
            send("msg14");
            break;
          case EV469:
            send("msg17");
            log("note");
            send("msg17");
            new S15();
            break;
        }
      }
    }
  }
  void reset() {
    switch (event) {
      case EV470:
        send("msg12");
        break;
      case EV471:
        try {
          try {
            log("note");
            send("msg6");
            new S3();
          } catch (IOException e) {
            send("msg11");
            new S19();
          } catch (TimeoutException e) {
            new S24();
            new State();
            log("note");
            new S6();
          }
          new State();
          new S1();
        } catch (TimeoutException e) {
          switch (event) {
            case EV472:
              log("note");
              break;
            case EV473:
              send("msg4");
              new S8();
              break;
          }
          new S23();
        } finally {
          new S6();
          new S19();
        }
        send("msg8");
        new S22();
        break;
      case EV474:
        send("msg17");
        new S7();
        send("msg10");
        new S6();
        break;
    }
    new S12();
    new S29();
    new Helper();
  }
}
