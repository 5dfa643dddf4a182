class S22 extends Abstract3 {
  void enter() {
    send("msg18");
    new S27();
  }
  void exit() {
    if (x8 > 0) {
      if (x3 > 0) {
        if (x9 > 0) {
          new S17();
          log("note");
        } else {
          new S23();
        }
        send("msg12");
      } else {
        log("note");
      }
      send("msg2");
    } else {
      send("msg6");
      new S27();
      switch (event) {
        case EV341:
          new S30();
          switch (event) {
            case EV342:
              send("msg18");
              send("msg11");
              break;
          }
          switch (event) {
            case EV343:
              new Helper();
              break;
            case EV344:
              new S5();
              new S6();
              send("msg14");
              break;
            case EV345:
              new S10();
              send("msg9");
              new S8();
              break;
          }
          break;
        case EV346:
          switch (event) {
            case EV347:
              new S15();
              new S15();
              break;
            case EV348:
              send("msg16");
              send("msg18");
              break;
            case EV349:
              send("msg11");
              break;
          }
          send("msg2");
          log("note");
          break;
        case EV350:
          send("msg19");
          if (x1 > 0) {
            send("msg14");
            send("msg1");
            new S18();
          }
          switch (event) {
            case EV351:
              send("msg11");
              new S21();
              send("msg12");
              break;
          }
          break;
      }
    }
    send("msg12");
    if (x3 > 0) {
      switch (event) {
        case EV352:
          new S27();
          send("msg4");
          try {
            new S26();
            send("msg1");
          } catch (IllegalStateException e) {
            send("msg10");
            new S26();
          } finally {
            new S24();
            new S25();
            send("msg14");
            new S25();
          }
          break;
        case EV353:
          new S20();
          try {
            send("msg5");
          } catch (IllegalStateException e) {
            send("msg15");
            send("msg11");
            send("msg18");
            new S25();
          } finally {
            send("msg15");
          }
          new S12();
          send("msg1");
          break;
      }
      new S24();
      switch (event) {
        case EV354:
          send("msg2");
          send("msg6");
          new S14();
          break;
        case EV355:
          send("msg0");
          try {
            new S1();
            log("note");
            new Helper();
            log("note");
          } catch (TimeoutException e) {
            log("note");
            send("msg13");
            new S2();
            new S19();
          }
          new S17();
          break;
        case EV356:
          send("msg11");
          new Helper();
          try {
            send("msg9");
            new S6();
            send("msg14");
            new S29();
          } finally {
            new S12();
            new S21();
            send("msg0");
          }
          try {
            new S20();
            send("msg18");
            log("note");
          } catch (IOException e) {
            new S18();
            send("msg3");
            new S29();
            new S18();
          } catch (IllegalStateException e) {
            new S29();
            send("msg2");
            send("msg1");
            new S4();
          }
          break;
      }
      try {
        send("msg5");
        switch (event) {
          case EV357:
            new S10();
            new S15();
            new S14();
            break;
        }
      } finally {
        send("msg1");
      }
    }
  }
  void handle() {
    if (x0 > 0) {
      switch (event) {
        case EV358:
          new S11();
          break;
        case EV359:
          send("msg17");
          switch (event) {
            case EV360:
              send("msg7");
              send("msg11");
              send("msg15");
              new S4();
              break;
          }
          try {
            new S20();
          } finally {
            new Helper();
            new S24();
            send("msg16");
            send("msg8");
          }
          break;
        case EV361:
          switch (event) {
            case EV362:
              new S11();
              send("msg0");
              new S24();
              send("msg14");
              break;
            case EV363:
              new S30();
              new S13();
              new S2();
              new S12();
              break;
            case EV364:
              new S8();
              log("note");
              new S8();
              break;
          }
          new S20();
          switch (event) {
            case EV365:
              new S28();
              send("msg19");
              break;
            case EV366:
              send("msg16");
              send("msg10");
              new S21();
              break;
            case EV367:
              send("msg6");
              send("msg11");
              send("msg10");
              new S1();
              break;
          }
          break;
      }
      new S18();
      new S18();
      send("msg18");
    } else {
      send("msg0");
    }
    switch (event) {
      case EV368:
        send("msg0");
        break;
      case EV369:
        switch (event) {
          case EV370:
            send("msg17");
            send("msg5");
            new S14();
            break;
        }
        new Helper();
        switch (event) {
          case EV371:
            new S7();
            new S3();
            send("msg0");
            break;
          case EV372:
            new S20();
            new S4();
            switch (event) {
              case EV373:
                send("msg0");
                send("msg15");
                new S26();
                break;
            }
            break;
        }
        send("msg9");
        break;
      case EV374:
        new Helper();
        new S30();
        break;
    }
  }
  public void tick() {
    new S20();
    new S10();
    send("msg17");
  }
  void reset() {
    if (x9 > 0) {
      new S6();
      log("note");
      new S30();
      log("note");
    } else {
      new Helper();
    }
    try {
      log("note");
    } catch (IllegalStateException e) {
      send("msg12");
      new Helper();
      if (x5 > 0) {
        send("msg8");
        log("note");
        new S4();
      }
      send("msg14");
    } catch (IllegalStateException e) {
      send("msg18");
      new S3();
      send("msg4");
      switch (event) {
        case EV375:
          new S6();
          new S25();
          break;
        case EV376:
          new Helper();
          break;
      }
    }
    try {
      if (x3 > 0) {
        log("note");
      } else {
        new S22();
        new S21();
      }
      switch (event) {
        case EV377:
          switch (event) {
            case EV378:
              new S30();
              new S13();
              new S21();
              send("msg1");
              break;
            case EV379:
              send("msg13");
              break;
            case EV380:
              log("note");
              new S8();
              send("msg5");
              new S13();
              break;
          }
          log("note");
          send("msg13");
          send("msg9");
          break;
      }
      send("msg14");
      new S9();
    } finally {
      new S3();
      log("note");
      if (x1 > 0) {
        new S21();
        send("msg0");
      } else {
        if (x4 > 0) {
          send("msg2");
          new S12();
          new S7();
        } else {
          new S24();
          new S20();
          send("msg7");
        }
        send("msg15");
        new Helper();
        new S25();
      }
      if (x5 > 0) {
        new S27();
      }
    }
    try {
      switch (event) {
        case EV381:
          new S20();
          send("msg8");
          new S8();
          break;
        case EV382:
          send("msg4");
          break;
      }
    } catch (IllegalStateException e) {
      new S23();
      send("msg12");
      if (x4 > 0) {
        try {
          new State();
          new S27();
          new S24();
        } catch (TimeoutException e) {
          log("note");
          send("msg12");
          send("msg16");
          send("msg10");
        } finally {
          new S2();
        }
        try {
          send("msg16");
          new S25();
          send("msg9");
        } catch (IllegalStateException e) {
          send("msg14");
        } catch (IOException e) {
          new S28();
          send("msg7");
        }
        log("note");
      } else {
        send("msg1");
        log("note");
        try {
          log("note");
          new S29();
        } finally {
          new S30();
        }
        new S11();
      }
    } catch (IllegalStateException e) {
      try {
        new S8();
        if (x7 > 0) {
          send("msg5");
          new S22();
          send("msg1");
          new S27();
        }
        send("msg2");
      } finally {
        new S10();
        new S1();
      }
    }
  }
}
